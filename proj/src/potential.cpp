#include "quadspec/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace quadspec {

Potential Potential::harmonic() {
  Potential v;
  v.kind = Kind::Harmonic;
  v.coeffs = {0.0, 0.0, 1.0};
  return v;
}

Potential Potential::anharmonic() {
  Potential v;
  v.kind = Kind::Anharmonic;
  v.coeffs = {0.0, 0.0, 0.0, 0.0, 1.0};
  return v;
}

Potential Potential::polynomial(std::vector<double> coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
  if (coeffs.empty()) coeffs.push_back(0.0);
  if (coeffs.size() > 9) {
    throw InvalidArgument("Potential: polynomial degree above 8 is outside the exact-quadrature path");
  }
  Potential v;
  v.kind = Kind::Polynomial;
  v.coeffs = std::move(coeffs);
  return v;
}

int Potential::degree() const { return static_cast<int>(coeffs.size()) - 1; }

double Potential::operator()(double x) const {
  switch (kind) {
    case Kind::Harmonic:
      return x * x;
    case Kind::Anharmonic: {
      const double x2 = x * x;
      return x2 * x2;
    }
    case Kind::Polynomial: {
      double acc = 0.0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
      return acc;
    }
  }
  return 0.0;
}

long double Potential::eval(long double x) const {
  switch (kind) {
    case Kind::Harmonic:
      return x * x;
    case Kind::Anharmonic: {
      const long double x2 = x * x;
      return x2 * x2;
    }
    case Kind::Polynomial: {
      long double acc = 0.0L;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + static_cast<long double>(*it);
      return acc;
    }
  }
  return 0.0L;
}

double Potential::min_on(double a) const {
  const int samples = 4096;
  double best = (*this)(-a);
  for (int i = 1; i <= samples; ++i) {
    const double x = -a + (2.0 * a * i) / samples;
    best = std::min(best, (*this)(x));
  }
  return best;
}

Potential parse_potential(const std::string& text) {
  if (text == "harmonic") return Potential::harmonic();
  if (text == "anharmonic") return Potential::anharmonic();
  const std::string prefix = "poly:";
  if (text.rfind(prefix, 0) == 0) {
    std::vector<double> coeffs;
    std::istringstream in(text.substr(prefix.size()));
    std::string item;
    while (std::getline(in, item, ',')) {
      size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(item, &used);
      } catch (const std::exception&) {
        throw InvalidArgument("parse_potential: bad coefficient '" + item + "'");
      }
      if (used != item.size()) throw InvalidArgument("parse_potential: bad coefficient '" + item + "'");
      coeffs.push_back(value);
    }
    if (coeffs.empty()) throw InvalidArgument("parse_potential: poly: needs at least one coefficient");
    return Potential::polynomial(std::move(coeffs));
  }
  throw InvalidArgument("parse_potential: expected harmonic, anharmonic, or poly:c0,c1,...");
}

std::string Potential::name() const {
  switch (kind) {
    case Kind::Harmonic:
      return "harmonic";
    case Kind::Anharmonic:
      return "anharmonic";
    case Kind::Polynomial: {
      std::ostringstream out;
      out << "poly:";
      for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out << ",";
        out << coeffs[i];
      }
      return out.str();
    }
  }
  return "";
}

}  // namespace quadspec
