#include "quadspec/closed_forms.hpp"

#include <algorithm>
#include <cmath>

#include "quadspec/assembly.hpp"

namespace quadspec {
namespace {

constexpr DofKind P = DofKind::Value;
constexpr DofKind Q = DofKind::Derivative;
constexpr BoundarySide BL = BoundarySide::Left;
constexpr BoundarySide BR = BoundarySide::Right;
constexpr BoundarySide IN = BoundarySide::None;

double ipow(double b, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

using F = double (*)(double, double);

struct CellDef {
  const char* row;
  BoundarySide side;
  DofKind ka, kb;
  int da_node, db_node, coordd;
  int da, db, m;
  F fn;
  const char* text;
  bool consistent;
};

// The tabulated closed forms, transcribed literally, including the cells the
// quadrature oracle exposes as corrupted (consistent = false). Each lambda
// takes (h, x) with x the tabulating node coordinate for its row.
const CellDef kCells[] = {
    // (q_0, q_0) block: m = 0, <b',b'>, <b'',b''>, m = 2, m = 4, m = 8.
    {"(q_0, q_0)", BL, Q, Q, 0, 0, 0, 0, 0, 0,
     +[](double h, double) { return h * h * h / 105; }, "h^3/105", true},
    {"(q_0, q_0)", BL, Q, Q, 0, 0, 0, 1, 1, 0,
     +[](double h, double) { return 2 * h / 15; }, "2h/15", true},
    {"(q_0, q_0)", BL, Q, Q, 0, 0, 0, 2, 2, 0,
     +[](double h, double) { return 4 / h; }, "4/h", true},
    {"(q_0, q_0)", BL, Q, Q, 0, 0, 0, 0, 0, 2,
     +[](double h, double x) { return ipow(h, 5) / 630 + ipow(h, 4) * x / 140 + ipow(h, 3) * x * x / 105; },
     "h^5/630 + h^4 x0/140 + h^3 x0^2/105", true},
    {"(q_0, q_0)", BL, Q, Q, 0, 0, 0, 0, 0, 4,
     +[](double h, double x) {
       return ipow(h, 3) / 6930 *
              (3 * ipow(h, 4) + 66 * ipow(x, 4) + 99 * h * ipow(x, 3) + 66 * h * h * x * x + 22 * ipow(h, 3) * x);
     },
     "h^3/6930 (3h^4 + 66x0^4 + 99h x0^3 + 66h^2 x0^2 + 22h^3 x0)", true},
    {"(q_0, q_0)", BL, Q, Q, 0, 0, 0, 0, 0, 8,
     +[](double h, double x) {
       return ipow(h, 3) / 45045 *
              (429 * ipow(x, 8) + 1287 * h * ipow(x, 7) + 2002 * h * h * ipow(x, 6) + 2002 * ipow(h, 3) * ipow(x, 5) +
               1365 * ipow(h, 4) * ipow(x, 4) + 637 * ipow(h, 5) * ipow(x, 3) + 196 * ipow(h, 6) * x * x +
               36 * ipow(h, 7) * x + 3 * ipow(h, 8));
     },
     "h^3/45045 (429x0^8 + 1287h x0^7 + 2002h^2 x0^6 + 2002h^3 x0^5 + 1365h^4 x0^4 + 637h^5 x0^3 + 196h^6 x0^2 + 36h^7 x0 + 3h^8)",
     true},

    // (q_n, q_n) block.
    {"(q_n, q_n)", BR, Q, Q, 0, 0, 0, 0, 0, 0,
     +[](double h, double) { return h * h * h / 105; }, "h^3/105", true},
    {"(q_n, q_n)", BR, Q, Q, 0, 0, 0, 1, 1, 0,
     +[](double h, double) { return 2 * h / 15; }, "2h/15", true},
    {"(q_n, q_n)", BR, Q, Q, 0, 0, 0, 2, 2, 0,
     +[](double h, double) { return 4 / h; }, "4/h", true},
    {"(q_n, q_n)", BR, Q, Q, 0, 0, 0, 0, 0, 2,
     +[](double h, double x) { return ipow(h, 5) / 630 - ipow(h, 4) * x / 140 + ipow(h, 3) * x * x / 105; },
     "h^5/630 - h^4 xn/140 + h^3 xn^2/105", true},
    {"(q_n, q_n)", BR, Q, Q, 0, 0, 0, 0, 0, 4,
     +[](double h, double x) {
       return ipow(h, 3) / 6930 *
              (3 * ipow(h, 4) + 66 * ipow(x, 4) - 99 * h * ipow(x, 3) + 66 * h * h * x * x - 22 * ipow(h, 3) * x);
     },
     "h^3/6930 (3h^4 + 66xn^4 - 99h xn^3 + 66h^2 xn^2 - 22h^3 xn)", true},
    {"(q_n, q_n)", BR, Q, Q, 0, 0, 0, 0, 0, 8,
     +[](double h, double x) {
       return ipow(h, 3) / 45045 *
              (429 * ipow(x, 8) - 1287 * h * ipow(x, 7) + 2002 * h * h * ipow(x, 6) - 2002 * ipow(h, 3) * ipow(x, 5) +
               1365 * ipow(h, 4) * ipow(x, 4) - 637 * ipow(h, 5) * ipow(x, 3) + 196 * ipow(h, 6) * x * x -
               36 * ipow(h, 7) * x + 3 * ipow(h, 8));
     },
     "h^3/45045 (429xn^8 - 1287h xn^7 + 2002h^2 xn^6 - 2002h^3 xn^5 + 1365h^4 xn^4 - 637h^5 xn^3 + 196h^6 xn^2 - 36h^7 xn + 3h^8)",
     true},

    // (q_0, p_1) block.
    {"(q_0, p_1)", BL, Q, P, 0, 1, 0, 0, 0, 0,
     +[](double h, double) { return 13 * h * h / 420; }, "13h^2/420", true},
    {"(q_0, p_1)", BL, Q, P, 0, 1, 0, 1, 1, 0,
     +[](double, double) { return -0.1; }, "-1/10", true},
    {"(q_0, p_1)", BL, Q, P, 0, 1, 0, 2, 2, 0,
     +[](double h, double) { return -6 / (h * h); }, "-6/h^2", true},
    {"(q_0, p_1)", BL, Q, P, 0, 1, 0, 0, 0, 2,
     +[](double h, double x) {
       return 5 * ipow(h, 4) / 504 + 13 * h * h * x * x / 420 + ipow(h, 3) * x / 30;
     },
     "5h^4/504 + 13h^2 x0^2/420 + h^3 x0/30", true},
    {"(q_0, p_1)", BL, Q, P, 0, 1, 0, 0, 0, 4,
     +[](double h, double x) {
       return h * h / 27720 *
              (119 * ipow(h, 4) + 858 * ipow(x, 4) + 1848 * h * ipow(x, 3) + 1650 * h * h * x * x + 704 * ipow(h, 3) * x);
     },
     "h^2/27720 (119h^4 + 858x0^4 + 1848h x0^3 + 1650h^2 x0^2 + 704h^3 x0)", true},
    {"(q_0, p_1)", BL, Q, P, 0, 1, 0, 0, 0, 8,
     +[](double h, double x) {
       return h * h / 180180 *
              (5577 * ipow(x, 8) + 24024 * h * ipow(x, 7) + 50050 * h * h * ipow(x, 6) + 64064 * ipow(h, 3) * ipow(x, 5) +
               54145 * ipow(h, 4) * ipow(x, 4) + 30576 * ipow(h, 5) * ipow(x, 3) + 11172 * ipow(h, 6) * x * x +
               2400 * ipow(h, 7) * x + 231 * ipow(h, 8));
     },
     "h^2/180180 (5577x0^8 + 24024h x0^7 + 50050h^2 x0^6 + 64064h^3 x0^5 + 54145h^4 x0^4 + 30576h^5 x0^3 + 11172h^6 x0^2 + 2400h^7 x0 + 231h^8)",
     true},

    // (q_0, q_1) block.
    {"(q_0, q_1)", BL, Q, Q, 0, 1, 0, 0, 0, 0,
     +[](double h, double) { return -3 * h * h * h / 420; }, "-3h^3/420", true},
    {"(q_0, q_1)", BL, Q, Q, 0, 1, 0, 1, 1, 0,
     +[](double h, double) { return -h / 30; }, "-h/30", true},
    {"(q_0, q_1)", BL, Q, Q, 0, 1, 0, 2, 2, 0,
     +[](double h, double) { return 2 / h; }, "2/h", true},
    {"(q_0, q_1)", BL, Q, Q, 0, 1, 0, 0, 0, 2,
     +[](double h, double x) {
       return -ipow(h, 5) / 504 - ipow(h, 4) * x / 140 - ipow(h, 3) * x * x / 140;
     },
     "-h^5/504 - h^4 x0/140 - h^3 x0^2/140", true},
    {"(q_0, q_1)", BL, Q, Q, 0, 1, 0, 0, 0, 4,
     +[](double h, double x) {
       return -ipow(h, 7) / 1320 - ipow(h, 3) * ipow(x, 4) / 140 - ipow(h, 4) * ipow(x, 3) / 70 -
              ipow(h, 5) * x * x / 84 - ipow(h, 6) * x / 210;
     },
     "-h^7/1320 - h^3 x0^4/140 - h^4 x0^3/70 - h^5 x0^2/84 - h^6 x0/210", true},
    {"(q_0, q_1)", BL, Q, Q, 0, 1, 0, 0, 0, 8,
     +[](double h, double x) {
       return -ipow(h, 3) / 180180 *
              (1287 * ipow(x, 8) + 5148 * h * ipow(x, 7) + 10010 * h * h * ipow(x, 6) + 12012 * ipow(h, 3) * ipow(x, 5) +
               9555 * ipow(h, 4) * ipow(x, 4) + 5096 * ipow(h, 5) * ipow(x, 3) + 1764 * ipow(h, 6) * x * x +
               360 * ipow(h, 7) * x + 33 * ipow(h, 8));
     },
     "-h^3/180180 (1287x0^8 + 5148h x0^7 + 10010h^2 x0^6 + 12012h^3 x0^5 + 9555h^4 x0^4 + 5096h^5 x0^3 + 1764h^6 x0^2 + 360h^7 x0 + 33h^8)",
     true},

    // (q_n, p_n-1) block.
    {"(q_n, p_n-1)", BR, Q, P, 0, -1, 0, 0, 0, 0,
     +[](double h, double) { return -13 * h * h / 420; }, "-13h^2/420", true},
    {"(q_n, p_n-1)", BR, Q, P, 0, -1, 0, 1, 1, 0,
     +[](double, double) { return 0.1; }, "1/10", true},
    {"(q_n, p_n-1)", BR, Q, P, 0, -1, 0, 2, 2, 0,
     +[](double h, double) { return 6 / (h * h); }, "6/h^2", true},
    {"(q_n, p_n-1)", BR, Q, P, 0, -1, 0, 0, 0, 2,
     +[](double h, double x) {
       return -5 * ipow(h, 4) / 504 + ipow(h, 3) * x / 30 - 13 * h * h * x * x / 420;
     },
     "-5h^4/504 + h^3 xn/30 - 13h^2 xn^2/420", true},
    {"(q_n, p_n-1)", BR, Q, P, 0, -1, 0, 0, 0, 4,
     +[](double h, double x) {
       return -h * h / 27720 *
              (119 * ipow(h, 4) + 858 * ipow(x, 4) + 1848 * h * ipow(x, 3) + 1650 * h * h * x * x + 704 * ipow(h, 3) * x);
     },
     "-h^2/27720 (119h^4 + 858xn^4 + 1848h xn^3 + 1650h^2 xn^2 + 704h^3 xn)", false},
    {"(q_n, p_n-1)", BR, Q, P, 0, -1, 0, 0, 0, 8,
     +[](double h, double x) {
       return -h * h / 180180 *
              (5577 * ipow(x, 8) - 24024 * h * ipow(x, 7) + 50050 * h * h * ipow(x, 6) - 64064 * ipow(h, 3) * ipow(x, 5) +
               54145 * ipow(h, 4) * ipow(x, 4) - 30576 * ipow(h, 5) * ipow(x, 3) + 11172 * ipow(h, 6) * x * x -
               2400 * ipow(h, 7) * x + 231 * ipow(h, 8));
     },
     "-h^2/180180 (5577xn^8 - 24024h xn^7 + 50050h^2 xn^6 - 64064h^3 xn^5 + 54145h^4 xn^4 - 30576h^5 xn^3 + 11172h^6 xn^2 - 2400h^7 xn + 231h^8)",
     true},

    // (q_n, q_n-1) block.
    {"(q_n, q_n-1)", BR, Q, Q, 0, -1, 0, 0, 0, 0,
     +[](double h, double) { return -3 * h * h * h / 420; }, "-3h^3/420", true},
    {"(q_n, q_n-1)", BR, Q, Q, 0, -1, 0, 1, 1, 0,
     +[](double h, double) { return -h / 30; }, "-h/30", true},
    {"(q_n, q_n-1)", BR, Q, Q, 0, -1, 0, 2, 2, 0,
     +[](double h, double) { return 2 / h; }, "2/h", true},
    {"(q_n, q_n-1)", BR, Q, Q, 0, -1, 0, 0, 0, 2,
     +[](double h, double x) {
       return -ipow(h, 5) / 504 + ipow(h, 4) * x / 140 - ipow(h, 3) * x * x / 140;
     },
     "-h^5/504 + h^4 xn/140 - h^3 xn^2/140", true},
    {"(q_n, q_n-1)", BR, Q, Q, 0, -1, 0, 0, 0, 4,
     +[](double h, double x) {
       return -ipow(h, 7) / 1320 - ipow(h, 3) * ipow(x, 4) / 140 + ipow(h, 4) * ipow(x, 3) / 70 -
              ipow(h, 5) * x * x / 84 + ipow(h, 6) * x / 210;
     },
     "-h^7/1320 - h^3 xn^4/140 + h^4 xn^3/70 - h^5 xn^2/84 + h^6 xn/210", true},
    {"(q_n, q_n-1)", BR, Q, Q, 0, -1, 0, 0, 0, 8,
     +[](double h, double x) {
       return -ipow(h, 3) / 180180 *
              (1287 * ipow(x, 8) - 5148 * h * ipow(x, 7) + 10010 * h * h * ipow(x, 6) - 12012 * ipow(h, 3) * ipow(x, 5) +
               9555 * ipow(h, 4) * ipow(x, 4) - 5096 * ipow(h, 5) * ipow(x, 3) + 1764 * ipow(h, 6) * x * x -
               360 * ipow(h, 7) * x + 33 * ipow(h, 8));
     },
     "-h^3/180180 (1287xn^8 - 5148h xn^7 + 10010h^2 xn^6 - 12012h^3 xn^5 + 9555h^4 xn^4 - 5096h^5 xn^3 + 1764h^6 xn^2 - 360h^7 xn + 33h^8)",
     true},

    // (p_j, p_j) block.
    {"(p_j, p_j)", IN, P, P, 0, 0, 0, 0, 0, 0,
     +[](double h, double) { return 52 * h / 70; }, "52h/70", true},
    {"(p_j, p_j)", IN, P, P, 0, 0, 0, 1, 1, 0,
     +[](double h, double) { return 12 * h / 5; }, "12h/5", false},
    {"(p_j, p_j)", IN, P, P, 0, 0, 0, 2, 2, 0,
     +[](double h, double) { return 24 / (h * h * h); }, "24/h^3", true},
    {"(p_j, p_j)", IN, P, P, 0, 0, 0, 0, 0, 2,
     +[](double h, double x) { return 19 * ipow(h, 3) / 315 + 26 * h * x * x / 35; },
     "19h^3/315 + 26h xj^2/35", true},
    {"(p_j, p_j)", IN, P, P, 0, 0, 0, 0, 0, 4,
     +[](double h, double x) {
       return ipow(h, 5) / 77 + 38 * ipow(h, 3) * x * x / 105 + 26 * h * ipow(x, 4) / 35;
     },
     "h^5/77 + 38h^3 xj^2/105 + 26h xj^4/35", true},
    {"(p_j, p_j)", IN, P, P, 0, 0, 0, 0, 0, 8,
     +[](double h, double x) {
       return 10 * ipow(h, 5) * ipow(x, 4) / 11 + 248 * ipow(h, 7) * x * x / 2145 + 26 * h * ipow(x, 8) / 35 +
              76 * ipow(h, 3) * ipow(x, 6) / 45 + 74 * ipow(h, 9) / 45045;
     },
     "10h^5 xj^4/11 + 248h^7 xj^2/2145 + 26h xj^8/35 + 76h^3 xj^6/45 + 74h^9/45045", true},

    // (q_j, q_j) block.
    {"(q_j, q_j)", IN, Q, Q, 0, 0, 0, 0, 0, 0,
     +[](double h, double) { return 8 * h * h * h / 420; }, "8h^3/420", true},
    {"(q_j, q_j)", IN, Q, Q, 0, 0, 0, 1, 1, 0,
     +[](double h, double) { return 8 * h / 30; }, "8h/30", true},
    {"(q_j, q_j)", IN, Q, Q, 0, 0, 0, 2, 2, 0,
     +[](double h, double) { return 8 / h; }, "8/h", true},
    {"(q_j, q_j)", IN, Q, Q, 0, 0, 0, 0, 0, 2,
     +[](double h, double x) { return 2 * ipow(h, 3) * x * x / 105 + ipow(h, 5) / 315; },
     "2h^3 xj^2/105 + h^5/315", true},
    {"(q_j, q_j)", IN, Q, Q, 0, 0, 0, 0, 0, 4,
     +[](double h, double x) {
       return ipow(h, 7) / 1155 + 2 * ipow(h, 3) * ipow(x, 4) / 105 + 2 * ipow(h, 5) * x * x / 105;
     },
     "h^7/1155 + 2h^3 xj^4/105 + 2h^5 xj^2/105", true},
    {"(q_j, q_j)", IN, Q, Q, 0, 0, 0, 0, 0, 8,
     +[](double h, double x) {
       return 2 * ipow(h, 3) * ipow(x, 8) / 105 + 56 * ipow(h, 9) * x * x / 6435 + 4 * ipow(h, 5) * ipow(x, 6) / 45 +
              2 * ipow(h, 7) * ipow(x, 4) / 33 + 2 * ipow(h, 11) / 15015;
     },
     "2h^3 xj^8/105 + 56h^9 xj^2/6435 + 4h^5 xj^6/45 + 2h^7 xj^4/33 + 2h^11/15015", true},

    // (q_j, p_j) block.
    {"(q_j, p_j)", IN, Q, P, 0, 0, 0, 0, 0, 0,
     +[](double, double) { return 0.0; }, "0", true},
    {"(q_j, p_j)", IN, Q, P, 0, 0, 0, 1, 1, 0,
     +[](double, double) { return 0.0; }, "0", true},
    {"(q_j, p_j)", IN, Q, P, 0, 0, 0, 2, 2, 0,
     +[](double, double) { return 0.0; }, "0", true},
    {"(q_j, p_j)", IN, Q, P, 0, 0, 0, 0, 0, 2,
     +[](double h, double x) { return ipow(h, 3) * x / 15; }, "h^3 xj/15", true},
    {"(q_j, p_j)", IN, Q, P, 0, 0, 0, 0, 0, 4,
     +[](double h, double x) { return 8 * ipow(h, 5) * x / 315 + 2 * ipow(h, 3) * ipow(x, 3) / 15; },
     "8h^5 xj/315 + 2h^3 xj^3/15", true},
    {"(q_j, p_j)", IN, Q, P, 0, 0, 0, 0, 0, 8,
     +[](double h, double x) {
       return 256 * ipow(h, 9) * x / 45045 + 52 * ipow(h, 7) * ipow(x, 3) / 495 + 4 * ipow(h, 3) * ipow(x, 7) / 15 +
              16 * ipow(h, 5) * ipow(x, 5) / 45;
     },
     "256h^9 xj/45045 + 52h^7 xj^3/495 + 4h^3 xj^7/15 + 16h^5 xj^5/45", true},

    // (p_j, p_j+1) block; tabulating coordinate x_{j+1}.
    {"(p_j, p_j+1)", IN, P, P, 0, 1, 1, 0, 0, 0,
     +[](double h, double) { return 9 * h / 70; }, "9h/70", true},
    {"(p_j, p_j+1)", IN, P, P, 0, 1, 1, 1, 1, 0,
     +[](double h, double) { return -6 * h / 5; }, "-6h/5", false},
    {"(p_j, p_j+1)", IN, P, P, 0, 1, 1, 2, 2, 0,
     +[](double h, double) { return -12 / (h * h * h); }, "-12/h^3", true},
    {"(p_j, p_j+1)", IN, P, P, 0, 1, 1, 0, 0, 2,
     +[](double h, double x) { return 23 * ipow(h, 3) / 630 - 81 * h * x + 81 * x * x; },
     "23h^3/630 - 81h xj+1 + 81xj+1^2", false},
    {"(p_j, p_j+1)", IN, P, P, 0, 1, 1, 0, 0, 4,
     +[](double h, double x) {
       return h / 4620 *
              (69 * ipow(h, 4) - 418 * ipow(h, 3) * x + 1012 * h * h * x * x - 1188 * h * ipow(x, 3) + 594 * ipow(x, 4));
     },
     "h/4620 (69h^4 - 418h^3 xj+1 + 1012h^2 xj+1^2 - 1188h xj+1^3 + 594xj+1^4)", true},
    {"(p_j, p_j+1)", IN, P, P, 0, 1, 1, 0, 0, 8,
     +[](double h, double x) {
       return h / 90090 *
              (11583 * ipow(x, 8) - 46332 * h * ipow(x, 7) + 92092 * h * h * ipow(x, 6) - 114114 * ipow(h, 3) * ipow(x, 5) +
               94185 * ipow(h, 4) * ipow(x, 4) - 52234 * ipow(h, 5) * ipow(x, 3) + 18816 * ipow(h, 6) * x * x -
               3996 * ipow(h, 7) * x + 381 * ipow(h, 8));
     },
     "h/90090 (11583xj+1^8 - 46332h xj+1^7 + 92092h^2 xj+1^6 - 114114h^3 xj+1^5 + 94185h^4 xj+1^4 - 52234h^5 xj+1^3 + 18816h^6 xj+1^2 - 3996h^7 xj+1 + 381h^8)",
     true},

    // (q_j, q_j+1) block; tabulating coordinate x_{j+1}.
    {"(q_j, q_j+1)", IN, Q, Q, 0, 1, 1, 0, 0, 0,
     +[](double h, double) { return -3 * h * h * h / 420; }, "-3h^3/420", true},
    {"(q_j, q_j+1)", IN, Q, Q, 0, 1, 1, 1, 1, 0,
     +[](double h, double) { return -h / 30; }, "-h/30", true},
    {"(q_j, q_j+1)", IN, Q, Q, 0, 1, 1, 2, 2, 0,
     +[](double h, double) { return 2 / h; }, "2/h", true},
    {"(q_j, q_j+1)", IN, Q, Q, 0, 1, 1, 0, 0, 2,
     +[](double h, double x) {
       return -ipow(h, 5) / 504 + ipow(h, 4) * x / 140 - ipow(h, 3) * x * x / 140;
     },
     "-h^5/504 + h^4 xj+1/140 - h^3 xj+1^2/140", true},
    {"(q_j, q_j+1)", IN, Q, Q, 0, 1, 1, 0, 0, 4,
     +[](double h, double x) {
       return -ipow(h, 7) / 1320 + ipow(h, 6) * x / 210 - ipow(h, 5) * x * x / 84 + ipow(h, 4) * ipow(x, 3) / 70 -
              ipow(h, 3) * ipow(x, 4) / 140;
     },
     "-h^7/1320 + h^6 xj+1/210 - h^5 xj+1^2/84 + h^4 xj+1^3/70 - h^3 xj+1^4/140", true},
    {"(q_j, q_j+1)", IN, Q, Q, 0, 1, 1, 0, 0, 8,
     +[](double h, double x) {
       return -ipow(h, 3) * ipow(x, 8) / 140 + ipow(h, 4) * ipow(x, 7) / 35 - ipow(h, 5) * ipow(x, 6) / 18 +
              ipow(h, 6) * ipow(x, 5) / 15 - 7 * ipow(h, 7) * ipow(x, 4) / 130 + 2 * ipow(h, 10) * x / 1001 -
              7 * ipow(h, 9) * x * x / 715 + 14 * ipow(h, 8) * ipow(x, 3) / 495 - ipow(h, 11) / 5460;
     },
     "-h^3 xj+1^8/140 + h^4 xj+1^7/35 - h^5 xj+1^6/18 + h^6 xj+1^5/15 - 7h^7 xj+1^4/130 + 2h^10 xj+1/1001 - 7h^9 xj+1^2/715 + 14h^8 xj+1^3/495 - h^11/5460",
     false},

    // (p_j, q_j+1) block; tabulating coordinate x_{j+1}.
    {"(p_j, q_j+1)", IN, P, Q, 0, 1, 1, 0, 0, 0,
     +[](double h, double) { return 13 * h * h / 420; }, "13h^2/420", false},
    {"(p_j, q_j+1)", IN, P, Q, 0, 1, 1, 1, 1, 0,
     +[](double, double) { return 0.1; }, "1/10", true},
    {"(p_j, q_j+1)", IN, P, Q, 0, 1, 1, 2, 2, 0,
     +[](double h, double) { return 6 / (h * h); }, "6/h^2", true},
    {"(p_j, q_j+1)", IN, P, Q, 0, 1, 1, 0, 0, 2,
     +[](double h, double x) { return 19 * ipow(h, 4) / 2520 - 72 * h * x + 78 * x * x; },
     "19h^4/2520 - 72h xj+1 + 78xj+1^2", false},
    {"(p_j, q_j+1)", IN, P, Q, 0, 1, 1, 0, 0, 4,
     +[](double h, double x) {
       return h * h / 27720 *
              (75 * ipow(h, 4) - 484 * ipow(h, 3) * x + 1254 * h * h * x * x - 1584 * h * ipow(x, 3) + 858 * ipow(x, 4));
     },
     "h^2/27720 (75h^4 - 484h^3 xj+1 + 1254h^2 xj+1^2 - 1584h xj+1^3 + 858xj+1^4)", false},
    {"(p_j, q_j+1)", IN, P, Q, 0, 1, 1, 0, 0, 8,
     +[](double h, double x) {
       return -h * h / 180180 *
              (5577 * ipow(x, 8) - 24024 * h * ipow(x, 7) + 50050 * h * h * ipow(x, 6) - 64064 * ipow(h, 3) * ipow(x, 5) +
               54145 * ipow(h, 4) * ipow(x, 4) - 30576 * ipow(h, 5) * ipow(x, 3) + 11172 * ipow(h, 6) * x * x -
               2400 * ipow(h, 7) * x + 231 * ipow(h, 8));
     },
     "-h^2/180180 (5577xj+1^8 - 24024h xj+1^7 + 50050h^2 xj+1^6 - 64064h^3 xj+1^5 + 54145h^4 xj+1^4 - 30576h^5 xj+1^3 + 11172h^6 xj+1^2 - 2400h^7 xj+1 + 231h^8)",
     true},

    // (p_j, q_j-1) block; tabulating coordinate is the right node of the
    // shared element, which is x_j itself.
    {"(p_j, q_j-1)", IN, P, Q, 0, -1, 0, 0, 0, 0,
     +[](double h, double) { return -13 * h * h / 420; }, "-13h^2/420", false},
    {"(p_j, q_j-1)", IN, P, Q, 0, -1, 0, 1, 1, 0,
     +[](double, double) { return -0.1; }, "-1/10", true},
    {"(p_j, q_j-1)", IN, P, Q, 0, -1, 0, 2, 2, 0,
     +[](double h, double) { return -6 / (h * h); }, "-6/h^2", true},
    {"(p_j, q_j-1)", IN, P, Q, 0, -1, 0, 0, 0, 2,
     +[](double h, double x) { return -25 * ipow(h, 4) / 2520 - 84 * h * x + 78 * x * x; },
     "-25h^4/2520 - 84h xj+1 + 78xj+1^2", false},
    {"(p_j, q_j-1)", IN, P, Q, 0, -1, 0, 0, 0, 4,
     +[](double h, double x) {
       return -h * h / 27720 *
              (119 * ipow(h, 4) - 704 * ipow(h, 3) * x + 1650 * h * h * x * x - 1848 * h * ipow(x, 3) + 858 * ipow(x, 4));
     },
     "-h^2/27720 (119h^4 - 704h^3 xj+1 + 1650h^2 xj+1^2 - 1848h xj+1^3 + 858xj+1^4)", false},
    {"(p_j, q_j-1)", IN, P, Q, 0, -1, 0, 0, 0, 8,
     +[](double h, double x) {
       return h * h / 180180 *
              (5577 * ipow(x, 8) - 20592 * h * ipow(x, 7) + 38038 * h * h * ipow(x, 6) - 44044 * ipow(h, 3) * ipow(x, 5) +
               34125 * ipow(h, 4) * ipow(x, 4) - 17836 * ipow(h, 5) * ipow(x, 3) + 6076 * ipow(h, 6) * x * x -
               1224 * ipow(h, 7) * x + 111 * ipow(h, 8));
     },
     "h^2/180180 (5577xj+1^8 - 20592h xj+1^7 + 38038h^2 xj+1^6 - 44044h^3 xj+1^5 + 34125h^4 xj+1^4 - 17836h^5 xj+1^3 + 6076h^6 xj+1^2 - 1224h^7 xj+1 + 111h^8)",
     true},

    // Second-derivative families <b'', x^m b>, m in {2, 4}.
    {"(q_0'', q_0)", BL, Q, Q, 0, 0, 0, 2, 0, 2,
     +[](double h, double x) { return -h / 105 * (h * h + 7 * h * x + 14 * x * x); },
     "-h/105 (h^2 + 7h x0 + 14x0^2)", true},
    {"(q_0'', q_0)", BL, Q, Q, 0, 0, 0, 2, 0, 4,
     +[](double h, double x) {
       return h * x / 105 * (-14 * ipow(x, 3) - 14 * h * x * x - 6 * h * h * x - ipow(h, 3));
     },
     "h x0/105 (-14x0^3 - 14h x0^2 - 6h^2 x0 - h^3)", true},
    {"(q_n'', q_n)", BR, Q, Q, 0, 0, 0, 2, 0, 2,
     +[](double h, double x) { return -h / 105 * (h * h - 7 * h * x + 14 * x * x); },
     "-h/105 (h^2 - 7h xn + 14xn^2)", true},
    {"(q_n'', q_n)", BR, Q, Q, 0, 0, 0, 2, 0, 4,
     +[](double h, double x) {
       return h * x / 105 * (14 * ipow(x, 3) - 14 * h * x * x + 6 * h * h * x - ipow(h, 3));
     },
     "h xn/105 (14xn^3 - 14h xn^2 + 6h^2 xn - h^3)", false},
    {"(q_0'', p_1)", BL, Q, P, 0, 1, 0, 2, 0, 2,
     +[](double h, double x) { return x * x / 10 + 2 * h * x / 5 + 23 * h * h / 105; },
     "x0^2/10 + 2h x0/5 + 23h^2/105", true},
    {"(q_0'', p_1)", BL, Q, P, 0, 1, 0, 2, 0, 4,
     +[](double h, double x) {
       return 17 * ipow(h, 4) / 84 + ipow(x, 4) / 10 + 4 * h * ipow(x, 3) / 5 + 46 * h * h * x * x / 35 +
              6 * ipow(h, 3) * x / 7;
     },
     "17h^4/84 + x0^4/10 + 4h x0^3/5 + 46h^2 x0^2/35 + 6h^3 x0/7", true},
    {"(p_1'', q_0)", BL, P, Q, 1, 0, 0, 2, 0, 2,
     +[](double h, double x) { return x * x / 10 - h * h / 70; }, "x0^2/10 - h^2/70", true},
    {"(p_1'', q_0)", BL, P, Q, 1, 0, 0, 2, 0, 4,
     +[](double h, double x) {
       return -ipow(h, 4) / 84 + ipow(x, 4) / 10 - 3 * h * h * x * x / 35 - 2 * ipow(h, 3) * x / 35;
     },
     "-h^4/84 + x0^4/10 - 3h^2 x0^2/35 - 2h^3 x0/35", true},
    {"(q_0'', q_1)", BL, Q, Q, 0, 1, 0, 2, 0, 2,
     +[](double h, double x) { return h / 210 * (7 * x * x - 2 * h * h); }, "h/210 (7x0^2 - 2h^2)", true},
    {"(q_0'', q_1)", BL, Q, Q, 0, 1, 0, 2, 0, 4,
     +[](double h, double x) {
       return h / 420 * (-5 * ipow(h, 4) + 14 * ipow(x, 4) - 24 * h * h * x * x - 20 * ipow(h, 3) * x);
     },
     "h/420 (-5h^4 + 14x0^4 - 24h^2 x0^2 - 20h^3 x0)", true},
    {"(q_1'', q_0)", BL, Q, Q, 1, 0, 0, 2, 0, 2,
     +[](double h, double x) { return h / 210 * (5 * h * h + 14 * h * x + 7 * x * x); },
     "h/210 (5h^2 + 14h x0 + 7x0^2)", true},
    {"(q_1'', q_0)", BL, Q, Q, 1, 0, 0, 2, 0, 4,
     +[](double h, double x) {
       return h / 420 *
              (5 * ipow(h, 4) + 28 * ipow(h, 3) * x + 60 * h * h * x * x + 56 * h * ipow(x, 3) + 14 * ipow(x, 4));
     },
     "h/420 (5h^4 + 28h^3 x0 + 60h^2 x0^2 + 56h x0^3 + 14x0^4)", true},
    {"(p_n-1'', q_n)", BR, P, Q, -1, 0, 0, 2, 0, 2,
     +[](double h, double x) { return -x * x / 10 + h * h / 70; }, "-xn^2/10 + h^2/70", true},
    {"(p_n-1'', q_n)", BR, P, Q, -1, 0, 0, 2, 0, 4,
     +[](double h, double x) {
       return ipow(h, 4) / 84 - ipow(x, 4) / 10 + 3 * h * h * x * x / 35 - 2 * ipow(h, 3) * x / 35;
     },
     "h^4/84 - xn^4/10 + 3h^2 xn^2/35 - 2h^3 xn/35", true},
    {"(q_n'', p_n-1)", BR, Q, P, 0, -1, 0, 2, 0, 2,
     +[](double h, double x) { return -x * x / 10 + 2 * h * x / 5 - 23 * h * h / 105; },
     "-xn^2/10 + 2h xn/5 - 23h^2/105", true},
    {"(q_n'', p_n-1)", BR, Q, P, 0, -1, 0, 2, 0, 4,
     +[](double h, double x) {
       return -17 * ipow(h, 4) / 84 - ipow(x, 4) / 10 + 4 * h * ipow(x, 3) / 5 - 46 * h * h * x * x / 35 +
              6 * ipow(h, 3) * x / 7;
     },
     "-17h^4/84 - xn^4/10 + 4h xn^3/5 - 46h^2 xn^2/35 + 6h^3 xn/7", true},
    {"(q_n-1'', q_n)", BR, Q, Q, -1, 0, 0, 2, 0, 2,
     +[](double h, double x) { return h / 210 * (5 * h * h - 14 * h * x + 7 * x * x); },
     "h/210 (5h^2 - 14h xn + 7xn^2)", true},
    {"(q_n-1'', q_n)", BR, Q, Q, -1, 0, 0, 2, 0, 4,
     +[](double h, double x) {
       return h / 420 *
              (5 * ipow(h, 4) - 28 * ipow(h, 3) * x + 60 * h * h * x * x - 56 * h * ipow(x, 3) + 14 * ipow(x, 4));
     },
     "h/420 (5h^4 - 28h^3 xn + 60h^2 xn^2 - 56h xn^3 + 14xn^4)", true},
    {"(q_n'', q_n-1)", BR, Q, Q, 0, -1, 0, 2, 0, 2,
     +[](double h, double x) { return h / 210 * (7 * x * x - 2 * h * h); }, "h/210 (7xn^2 - 2h^2)", true},
    {"(q_n'', q_n-1)", BR, Q, Q, 0, -1, 0, 2, 0, 4,
     +[](double h, double x) {
       return h / 420 * (-5 * ipow(h, 4) + 14 * ipow(x, 4) - 24 * h * h * x * x + 20 * ipow(h, 3) * x);
     },
     "h/420 (-5h^4 + 14xn^4 - 24h^2 xn^2 + 20h^3 xn)", true},
    {"(p_j'', p_j)", IN, P, P, 0, 0, 0, 2, 0, 2,
     +[](double h, double x) { return -2 / (35 * h) * (-h * h + 42 * x * x); },
     "-2/(35h) (-h^2 + 42xj^2)", true},
    {"(p_j'', p_j)", IN, P, P, 0, 0, 0, 2, 0, 4,
     +[](double h, double x) {
       return -4.0 / 105 / h * (-2 * ipow(h, 4) - 9 * h * h * x * x + 63 * ipow(x, 4));
     },
     "-4/(105h) (-2h^4 - 9h^2 xj^2 + 63xj^4)", true},
    {"(q_j'', q_j)", IN, Q, Q, 0, 0, 0, 2, 0, 2,
     +[](double h, double x) { return 8 * ipow(h, 3) / 1575 - 4 * h * x * x / 15; },
     "8h^3/1575 - 4h xj^2/15", false},
    {"(q_j'', q_j)", IN, Q, Q, 0, 0, 0, 2, 0, 4,
     +[](double h, double x) { return -4 * ipow(h, 3) * x * x / 35 - 4 * h * ipow(x, 4) / 15; },
     "-4h^3 xj^2/35 - 4h xj^4/15", true},
    {"(p_j'', q_j)", IN, P, Q, 0, 0, 0, 2, 0, 2,
     +[](double, double) { return 0.0; }, "0", true},
    {"(p_j'', q_j)", IN, P, Q, 0, 0, 0, 2, 0, 4,
     +[](double h, double x) { return 4 * ipow(h, 3) * ipow(x, 4) / 35; }, "4h^3 xj^4/35", false},
    {"(q_j'', p_j)", IN, Q, P, 0, 0, 0, 2, 0, 2,
     +[](double h, double x) { return -4 * h * x / 5; }, "-4h xj/5", true},
    {"(q_j'', p_j)", IN, Q, P, 0, 0, 0, 2, 0, 4,
     +[](double h, double x) { return -4 * ipow(h, 3) * x / 35 + 8 * h * ipow(x, 3) / 5; },
     "-4h^3 xj/35 + 8h xj^3/5", false},
    {"(p_j'', p_j+1)", IN, P, P, 0, 1, 1, 2, 0, 2,
     +[](double h, double x) { return 1 / (35 * h) * (-h * h - 7 * h * x + 42 * x * x); },
     "1/(35h) (-h^2 - 7h xj+1 + 42xj+1^2)", true},
    {"(p_j'', p_j+1)", IN, P, P, 0, 1, 1, 2, 0, 4,
     +[](double h, double x) {
       return 2.0 / 105 / h *
              (-2 * ipow(h, 4) + 9 * ipow(h, 3) * x - 9 * h * h * x * x - 21 * h * ipow(x, 3) + 63 * ipow(x, 4));
     },
     "2/(105h) (-2h^4 + 9h^3 xj+1 - 9h^2 xj+1^2 - 21h xj+1^3 + 63xj+1^4)", true},
    {"(p_j'', p_j-1)", IN, P, P, 0, -1, 0, 2, 0, 2,
     +[](double h, double x) { return 1 / (35 * h) * (34 * h * h - 77 * h * x + 42 * x * x); },
     "1/(35h) (34h^2 - 77h xj + 42xj^2)", true},
    {"(p_j'', p_j-1)", IN, P, P, 0, -1, 0, 2, 0, 4,
     +[](double h, double x) {
       return 2.0 / 105 / h *
              (40 * ipow(h, 4) - 180 * ipow(h, 3) * x + 306 * h * h * x * x - 231 * h * ipow(x, 3) + 63 * ipow(x, 4));
     },
     "2/(105h) (40h^4 - 180h^3 xj + 306h^2 xj^2 - 231h xj^3 + 63xj^4)", true},
    {"(q_j'', q_j+1)", IN, Q, Q, 0, 1, 1, 2, 0, 2,
     +[](double h, double x) { return h / 210 * (5 * h * h - 14 * h * x + 7 * x * x); },
     "h/210 (5h^2 - 14h xj+1 + 7xj+1^2)", true},
    {"(q_j'', q_j+1)", IN, Q, Q, 0, 1, 1, 2, 0, 4,
     +[](double h, double x) {
       return h / 420 *
              (5 * ipow(h, 4) - 28 * ipow(h, 3) * x + 60 * h * h * x * x - 56 * h * ipow(x, 3) + 14 * ipow(x, 4));
     },
     "h/420 (5h^4 - 28h^3 xj+1 + 60h^2 xj+1^2 - 56h xj+1^3 + 14xj+1^4)", true},
    {"(q_j'', q_j-1)", IN, Q, Q, 0, -1, 0, 2, 0, 2,
     +[](double h, double x) { return h / 210 * (-2 * h * h + 7 * x * x); }, "h/210 (-2h^2 + 7xj^2)", true},
    {"(q_j'', q_j-1)", IN, Q, Q, 0, -1, 0, 2, 0, 4,
     +[](double h, double x) {
       return h / 420 * (-5 * ipow(h, 4) + 20 * ipow(h, 3) * x - 24 * h * h * x * x + 14 * ipow(x, 4));
     },
     "h/420 (-5h^4 + 20h^3 xj - 24h^2 xj^2 + 14xj^4)", true},
    {"(p_j'', q_j+1)", IN, P, Q, 0, 1, 1, 2, 0, 2,
     +[](double h, double x) { return h * h / 70 - x * x / 10; }, "h^2/70 - xj+1^2/10", true},
    {"(p_j'', q_j+1)", IN, P, Q, 0, 1, 1, 2, 0, 4,
     +[](double h, double x) {
       return -ipow(h, 4) / 84 - 2 * ipow(h, 3) * x / 35 + 3 * h * h * x * x / 35 - ipow(x, 4) / 10;
     },
     "-h^4/84 - 2h^3 xj+1/35 + 3h^2 xj+1^2/35 - xj+1^4/10", false},
    {"(q_j'', p_j-1)", IN, Q, P, 0, -1, 0, 2, 0, 2,
     +[](double h, double x) { return -23 * h * h / 105 + 2 * h * x / 5 - x * x / 10; },
     "-23h^2/105 + 2h xj/5 - xj^2/10", true},
    {"(q_j'', p_j-1)", IN, Q, P, 0, -1, 0, 2, 0, 4,
     +[](double h, double x) {
       return -17 * ipow(h, 4) / 84 + 6 * ipow(h, 3) * x / 7 - 46 * h * h * x * x / 35 + 4 * h * ipow(x, 3) / 5 -
              ipow(x, 4) / 10;
     },
     "-17h^4/84 + 6h^3 xj/7 - 46h^2 xj^2/35 + 4h xj^3/5 - xj^4/10", true},
    {"(q_j'', p_j+1)", IN, Q, P, 0, 1, 1, 2, 0, 2,
     +[](double h, double x) { return -17 * h * h / 210 + h * x / 5 + x * x / 10; },
     "-17h^2/210 + h xj+1/5 + xj+1^2/10", true},
    {"(q_j'', p_j+1)", IN, Q, P, 0, 1, 1, 2, 0, 4,
     +[](double h, double x) {
       return -17 * ipow(h, 4) / 420 + 8 * ipow(h, 3) * x / 35 - 17 * h * h * x * x / 35 + 2 * h * ipow(x, 3) / 5 +
              ipow(x, 4) / 10;
     },
     "-17h^4/420 + 8h^3 xj+1/35 - 17h^2 xj+1^2/35 + 2h xj+1^3/5 + xj+1^4/10", true},
    {"(p_j'', q_j-1)", IN, P, Q, 0, -1, 0, 2, 0, 2,
     +[](double h, double x) { return 3 * h * h / 35 - h * x / 5 + x * x / 10; },
     "3h^2/35 - h xj/5 + xj^2/10", true},
    {"(p_j'', q_j-1)", IN, P, Q, 0, -1, 0, 2, 0, 4,
     +[](double h, double x) {
       return -5 * ipow(h, 4) / 84 - 2 * ipow(h, 3) * x / 7 + 18 * h * h * x * x / 35 - 2 * h * ipow(x, 3) / 5 +
              ipow(x, 4) / 10;
     },
     "-5h^4/84 - 2h^3 xj/7 + 18h^2 xj^2/35 - 2h xj^3/5 + xj^4/10", false},
};

bool key_matches(const ClosedFormCell& cell, const LocalIntegralKey& key) {
  return cell.kind_a == key.left_kind && cell.kind_b == key.right_kind &&
         cell.deriv_a == key.deriv_left && cell.deriv_b == key.deriv_right && cell.m == key.m &&
         (cell.delta_b - cell.delta_a) == key.offset && cell.side == key.boundary;
}

}  // namespace

const std::vector<ClosedFormCell>& closed_form_cells() {
  static const std::vector<ClosedFormCell> cells = [] {
    std::vector<ClosedFormCell> out;
    for (const CellDef& def : kCells) {
      ClosedFormCell cell;
      cell.row = def.row;
      cell.side = def.side;
      cell.kind_a = def.ka;
      cell.kind_b = def.kb;
      cell.delta_a = def.da_node;
      cell.delta_b = def.db_node;
      cell.coord_delta = def.coordd;
      cell.deriv_a = def.da;
      cell.deriv_b = def.db;
      cell.m = def.m;
      cell.closed = def.fn;
      cell.closed_text = def.text;
      cell.consistent = def.consistent;
      out.push_back(cell);
    }
    return out;
  }();
  return cells;
}

std::optional<double> closed_form_entry(const LocalIntegralKey& key, double h, double node_coord) {
  LocalIntegralKey transposed;
  transposed.left_kind = key.right_kind;
  transposed.right_kind = key.left_kind;
  transposed.deriv_left = key.deriv_right;
  transposed.deriv_right = key.deriv_left;
  transposed.m = key.m;
  transposed.offset = -key.offset;
  transposed.boundary = key.boundary;
  for (const ClosedFormCell& cell : closed_form_cells()) {
    if (key_matches(cell, key) || key_matches(cell, transposed)) {
      if (!cell.consistent) return std::nullopt;
      return cell.closed(h, node_coord);
    }
  }
  return std::nullopt;
}

ClosedFormReport verify_closed_forms(const Mesh& mesh) {
  const int n = mesh.spec.n;
  if (n < 4) throw InvalidArgument("verify_closed_forms: need n >= 4 so interior samples exist");
  ClosedFormReport report;
  for (const ClosedFormCell& cell : closed_form_cells()) {
    std::vector<int> anchors;
    if (cell.side == BoundarySide::Left) {
      anchors = {0};
    } else if (cell.side == BoundarySide::Right) {
      anchors = {n};
    } else {
      anchors = {2, n / 2, n - 2};
    }
    ClosedFormRowReport row;
    row.row = cell.row;
    row.deriv_a = cell.deriv_a;
    row.deriv_b = cell.deriv_b;
    row.m = cell.m;
    row.closed_text = cell.closed_text;
    row.max_rel_dev = 0.0;
    for (int anchor : anchors) {
      const Dof dof_a{cell.kind_a, anchor + cell.delta_a};
      const Dof dof_b{cell.kind_b, anchor + cell.delta_b};
      const double oracle = local_moment(mesh, dof_a, dof_b, cell.deriv_a, cell.deriv_b, cell.m);
      const double closed = cell.closed(mesh.h, mesh.nodes[anchor + cell.coord_delta]);
      // Deviations are scaled by the absolute-integrand quadrature: a signed
      // integral that cancels to zero still carries roundoff of that size, and
      // a bare relative test would flag the exact-zero rows for it.
      const double mag = local_moment_abs(mesh, dof_a, dof_b, cell.deriv_a, cell.deriv_b, cell.m);
      const double scale = std::max({std::abs(oracle), std::abs(closed), mag, 1e-300});
      const double dev = std::abs(oracle - closed) / scale;
      if (dev >= row.max_rel_dev) {
        row.max_rel_dev = dev;
        row.oracle_value = oracle;
        row.closed_value = closed;
      }
    }
    row.consistent = row.max_rel_dev <= 1e-12;
    if (row.consistent) {
      ++report.verified;
    } else {
      ++report.inconsistent;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace quadspec
