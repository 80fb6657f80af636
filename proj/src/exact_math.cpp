#include "polynet/exact_math.hpp"

#include <sstream>

#include "polynet/errors.hpp"

namespace polynet {

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s) {
    std::string digits(s);
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    bool ok = !digits.empty();
    for (std::size_t i = 0; i < digits.size() && ok; ++i) {
      const char c = digits[i];
      ok = (c >= '0' && c <= '9') || (i == 0 && c == '-' && digits.size() > 1);
    }
    if (!ok) throw ValidationError("not an integer: '" + std::string(s) + "'");
    return BigInt(digits, 10);
  };
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), BigInt(1));
  const BigInt den = parse_int(trim(text.substr(slash + 1)));
  if (den == 0) throw ValidationError("zero denominator: '" + std::string(text) + "'");
  return Rational(parse_int(trim(text.substr(0, slash))), den);
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_short_string() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
  return Rational(std::move(acc));
}

Rational squared_distance(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("squared_distance: length mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const mpq_class d = a[i].raw() - b[i].raw();
    acc += d * d;
  }
  return Rational(std::move(acc));
}

Rational sum(std::span<const Rational> values) {
  mpq_class acc = 0;
  for (const auto& v : values) acc += v.raw();
  return Rational(std::move(acc));
}

RatMatrix::RatMatrix(std::size_t order) : order_(order), entries_(order * order) {
  if (order == 0) throw DimensionError("matrix order must be positive");
}

RatMatrix::RatMatrix(std::size_t order, std::vector<Rational> row_major)
    : order_(order), entries_(std::move(row_major)) {
  if (order == 0) throw DimensionError("matrix order must be positive");
  if (entries_.size() != order * order) throw DimensionError("matrix entry count mismatch");
}

RatMatrix RatMatrix::identity(std::size_t order) {
  RatMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RatMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw DimensionError("from_rows: matrix is not square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatVector RatMatrix::column(std::size_t col) const {
  RatVector out;
  out.reserve(order_);
  for (std::size_t r = 0; r < order_; ++r) out.push_back((*this)(r, col));
  return out;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * order_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * order_));
}

void RatMatrix::set_column(std::size_t col, std::span<const Rational> values) {
  if (values.size() != order_) throw DimensionError("set_column: length mismatch");
  for (std::size_t r = 0; r < order_; ++r) (*this)(r, col) = values[r];
}

RatVector RatMatrix::operator*(std::span<const Rational> v) const {
  if (v.size() != order_) throw DimensionError("matrix-vector: length mismatch");
  RatVector out(order_);
  mpq_class acc;
  for (std::size_t r = 0; r < order_; ++r) {
    acc = 0;
    for (std::size_t c = 0; c < order_; ++c) {
      const auto& e = (*this)(r, c);
      if (!e.is_zero()) acc += e.raw() * v[c].raw();
    }
    out[r] = Rational(acc);
  }
  return out;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < order_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < order_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c).to_short_string();
    }
  }
  os << ']';
  return os.str();
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.order() != b.order()) {
    throw DimensionError("mat_mul: order mismatch (" + std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()) + ")");
  }
  const std::size_t n = a.order();
  RatMatrix out(n);
  mpq_class acc;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const auto& x = a(r, k);
        const auto& y = b(k, c);
        if (!x.is_zero() && !y.is_zero()) acc += x.raw() * y.raw();
      }
      out(r, c) = Rational(acc);
    }
  }
  return out;
}

RatPoly::RatPoly(std::vector<Rational> ascending) : coefficients_(std::move(ascending)) {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

Rational RatPoly::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : Rational(0);
}

Rational RatPoly::lowest_term() const {
  for (const auto& c : coefficients_) {
    if (!c.is_zero()) return c;
  }
  return 0;
}

std::string RatPoly::to_string() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const auto& c = coefficients_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (!unit || k == 0) os << mag.to_short_string();
    if (k >= 1) os << (unit ? "" : "*") << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

Rational poly_eval(const RatPoly& p, const Rational& x) {
  mpq_class acc = 0;
  const auto& cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x.raw() + it->raw();
  return Rational(std::move(acc));
}

RatPoly poly_interpolate(std::span<const std::pair<Rational, Rational>> points) {
  const std::size_t m = points.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (points[i].first == points[j].first) {
        throw ValidationError("poly_interpolate: duplicate abscissa " +
                              points[i].first.to_short_string());
      }
    }
  }
  // Divided differences in place: diff[i] becomes f[x_0..x_i].
  std::vector<mpq_class> diff;
  diff.reserve(m);
  for (const auto& p : points) diff.push_back(p.second.raw());
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      diff[i] = (diff[i] - diff[i - 1]) / (points[i].first.raw() - points[i - level].first.raw());
    }
  }
  // Expand the Newton form from the innermost term outward.
  std::vector<mpq_class> coeffs;
  for (std::size_t idx = m; idx-- > 0;) {
    // coeffs = coeffs * (x - x_idx) + diff[idx]
    std::vector<mpq_class> next(coeffs.size() + 1, mpq_class(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] -= coeffs[k] * points[idx].first.raw();
    }
    next[0] += diff[idx];
    coeffs = std::move(next);
  }
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (auto& c : coeffs) out.emplace_back(std::move(c));
  return RatPoly(std::move(out));
}

}  // namespace polynet
