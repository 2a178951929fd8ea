#include "bincayley/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "bincayley/error.hpp"

namespace bincayley {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw_internal("cyclotomic coefficient overflow");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw_internal("cyclotomic coefficient overflow");
  return r;
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

// Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}: multiply first, then divide.
std::vector<std::int64_t> build_cyclotomic(int m) {
  std::vector<std::int64_t> p{1};
  std::vector<int> divide;
  for (int d = 1; d <= m; ++d) {
    if (m % d) continue;
    const int mu = mobius(m / d);
    if (mu == 1) {
      std::vector<std::int64_t> q(p.size() + d, 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i + d] = add_checked(q[i + d], p[i]);
        q[i] = add_checked(q[i], -p[i]);
      }
      p = std::move(q);
    } else if (mu == -1) {
      divide.push_back(d);
    }
  }
  for (int d : divide) {
    // p = q (x^d - 1)  =>  q[i] = q[i-d] - p[i].
    std::vector<std::int64_t> q(p.size() - d, 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      q[i] = (i >= static_cast<std::size_t>(d) ? q[i - d] : 0) - p[i];
    p = std::move(q);
  }
  return p;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int m) {
  require(m >= 1, "cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<std::int64_t>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, build_cyclotomic(m)).first;
  return it->second;
}

int euler_phi(int m) { return static_cast<int>(cyclotomic_polynomial(m).size()) - 1; }

CyclotomicValue::CyclotomicValue(int m) : coeffs_(static_cast<std::size_t>(m), 0) {
  require(m >= 1, "cyclotomic order must be positive");
}

CyclotomicValue CyclotomicValue::root_power(int m, std::int64_t e) {
  CyclotomicValue v(m);
  v.add_power(e, 1);
  return v;
}

CyclotomicValue CyclotomicValue::integer(int m, std::int64_t c) {
  CyclotomicValue v(m);
  v.coeffs_[0] = c;
  return v;
}

void CyclotomicValue::add_power(std::int64_t e, std::int64_t c) {
  const std::int64_t m = order();
  std::int64_t r = e % m;
  if (r < 0) r += m;
  coeffs_[static_cast<std::size_t>(r)] = add_checked(coeffs_[static_cast<std::size_t>(r)], c);
}

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& o) {
  require(o.order() == order(), "cyclotomic orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = add_checked(coeffs_[i], o.coeffs_[i]);
  return *this;
}

CyclotomicValue& CyclotomicValue::operator-=(const CyclotomicValue& o) {
  require(o.order() == order(), "cyclotomic orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = add_checked(coeffs_[i], -o.coeffs_[i]);
  return *this;
}

CyclotomicValue& CyclotomicValue::operator*=(std::int64_t c) {
  for (auto& v : coeffs_) v = mul_checked(v, c);
  return *this;
}

CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b) {
  require(a.order() == b.order(), "cyclotomic orders differ");
  const std::size_t m = a.coeffs_.size();
  CyclotomicValue out(a.order());
  for (std::size_t i = 0; i < m; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (b.coeffs_[j] == 0) continue;
      auto& slot = out.coeffs_[(i + j) % m];
      slot = add_checked(slot, mul_checked(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return out;
}

CyclotomicValue CyclotomicValue::conjugate() const {
  const std::size_t m = coeffs_.size();
  CyclotomicValue out(order());
  for (std::size_t i = 0; i < m; ++i) out.coeffs_[(m - i) % m] = coeffs_[i];
  return out;
}

std::vector<std::int64_t> CyclotomicValue::reduced() const {
  const auto& phi = cyclotomic_polynomial(order());
  const std::size_t deg = phi.size() - 1;
  std::vector<std::pair<std::size_t, std::int64_t>> low;  // nonzero terms below the leading one
  for (std::size_t j = 0; j < deg; ++j)
    if (phi[j] != 0) low.emplace_back(j, phi[j]);
  std::vector<std::int64_t> r = coeffs_;
  // Phi_m divides the sparse 1 + x^s + ... + x^{(q-1)s} with q the smallest
  // prime factor of m and s = m / q, so reduce by that first.
  std::size_t top = r.size();
  const int m = order();
  int q = 2;
  while (q < m && m % q) ++q;
  if (m > 1) {
    const std::size_t stride = static_cast<std::size_t>(m / q);
    const std::size_t lead = static_cast<std::size_t>(q - 1) * stride;
    for (std::size_t i = top; i-- > lead;) {
      const std::int64_t c = r[i];
      if (c == 0) continue;
      r[i] = 0;
      for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(q); ++j)
        r[i - lead + j * stride] = add_checked(r[i - lead + j * stride], -c);
    }
    top = lead;
  }
  for (std::size_t i = top; i-- > deg;) {
    const std::int64_t c = r[i];
    if (c == 0) continue;
    r[i] = 0;
    for (auto [j, pj] : low) r[i - deg + j] = add_checked(r[i - deg + j], -mul_checked(c, pj));
  }
  r.resize(deg);
  return r;
}

bool CyclotomicValue::is_zero() const {
  for (std::int64_t v : reduced())
    if (v != 0) return false;
  return true;
}

std::optional<std::int64_t> CyclotomicValue::as_integer() const {
  auto r = reduced();
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return std::nullopt;
  return r.empty() ? 0 : r[0];
}

std::string CyclotomicValue::to_string() const {
  auto r = reduced();
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t c = r[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    std::uint64_t mag = neg ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (i == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag) + "*";
    s += i == 1 ? "z" : "z^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

bool operator==(const CyclotomicValue& a, const CyclotomicValue& b) {
  if (a.order() != b.order()) return false;
  CyclotomicValue d = a;
  d -= b;
  return d.is_zero();
}

}  // namespace bincayley
