#include "arithdyn/points.hpp"

#include <sstream>

#include "arithdyn/error.hpp"

namespace arithdyn {

ProjPoint ProjPoint::from_integers(std::vector<Integer> coords) {
  if (coords.empty()) fail(ErrorKind::Structural, "empty coordinate tuple");
  Integer g(0);
  for (const auto& c : coords) g = gcd(g, c);
  if (g == 0) fail(ErrorKind::Structural, "projective point cannot be all zero");
  for (auto& c : coords) {
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  for (const auto& c : coords) {
    if (c != 0) {
      if (c < 0) {
        for (auto& x : coords) x = -x;
      }
      break;
    }
  }
  ProjPoint p;
  p.coords_ = std::move(coords);
  return p;
}

ProjPoint ProjPoint::from_rationals(const std::vector<Rational>& coords) {
  if (coords.empty()) fail(ErrorKind::Structural, "empty coordinate tuple");
  Integer den_lcm(1);
  for (const auto& c : coords) den_lcm = lcm(den_lcm, Integer(c.get_den()));
  std::vector<Integer> ints;
  ints.reserve(coords.size());
  for (const auto& c : coords) {
    Rational scaled = c * Rational(den_lcm);
    ints.emplace_back(scaled.get_num());
  }
  return from_integers(std::move(ints));
}

Integer ProjPoint::max_abs_coord() const {
  Integer m(0);
  for (const auto& c : coords_) {
    Integer a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

std::string ProjPoint::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ":";
    out << coords_[i].get_str();
  }
  out << "]";
  return out.str();
}

ProjPoint ProjPoint::parse(const std::string& text) {
  std::size_t a = text.find('[');
  std::size_t b = text.rfind(']');
  if (a == std::string::npos || b == std::string::npos || b <= a) {
    fail(ErrorKind::Parse, "projective point must look like [a0:a1:...]: '" + text + "'");
  }
  std::vector<Integer> coords;
  std::string body = text.substr(a + 1, b - a - 1);
  std::istringstream in(body);
  std::string piece;
  while (std::getline(in, piece, ':')) {
    piece.erase(0, piece.find_first_not_of(" \t"));
    piece.erase(piece.find_last_not_of(" \t") + 1);
    Integer z;
    if (piece.empty() || mpz_set_str(z.get_mpz_t(), piece.c_str(), 10) != 0) {
      fail(ErrorKind::Parse, "bad projective coordinate '" + piece + "'");
    }
    coords.push_back(std::move(z));
  }
  if (coords.empty()) fail(ErrorKind::Parse, "empty projective point");
  return from_integers(std::move(coords));
}

bool AffinePoint::operator<(const AffinePoint& rhs) const {
  const std::size_t n = std::min(coords_.size(), rhs.coords_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(coords_[i], rhs.coords_[i]);
    if (c != 0) return c < 0;
  }
  return coords_.size() < rhs.coords_.size();
}

std::string AffinePoint::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ", ";
    out << coords_[i].get_str();
  }
  out << ")";
  return out.str();
}

AffinePoint AffinePoint::parse(const std::string& text) {
  std::size_t a = text.find('(');
  std::size_t b = text.rfind(')');
  if (a == std::string::npos || b == std::string::npos || b <= a) {
    fail(ErrorKind::Parse, "affine point must look like (r1, ..., rN): '" + text + "'");
  }
  std::vector<Rational> coords;
  std::string body = text.substr(a + 1, b - a - 1);
  std::istringstream in(body);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    piece.erase(0, piece.find_first_not_of(" \t"));
    piece.erase(piece.find_last_not_of(" \t") + 1);
    coords.push_back(parse_rational(piece));
  }
  if (coords.empty()) fail(ErrorKind::Parse, "empty affine point");
  return AffinePoint(std::move(coords));
}

ProjPoint projective_closure(const AffinePoint& p) {
  std::vector<Rational> coords = p.coords();
  coords.emplace_back(1);
  return ProjPoint::from_rationals(coords);
}

std::optional<AffinePoint> affine_chart(const ProjPoint& p) {
  const Integer& last = p.coords().back();
  if (last == 0) return std::nullopt;
  std::vector<Rational> coords;
  coords.reserve(p.size() - 1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    coords.push_back(make_rational(p.coords()[i], last));
  }
  return AffinePoint(std::move(coords));
}

}  // namespace arithdyn
