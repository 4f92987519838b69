#include "gcat/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gcat {

long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// ---- dense polynomial helpers over Q (coefficient index = degree) ----

void poly_trim(std::vector<Rat>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// a = q*b + r with deg r < deg b; b must be nonzero.
void poly_divmod(std::vector<Rat> a, const std::vector<Rat>& b,
                 std::vector<Rat>& q, std::vector<Rat>& r) {
  poly_trim(a);
  std::vector<Rat> bb = b;
  poly_trim(bb);
  if (bb.empty()) throw math_error("polynomial division by zero");
  q.assign(a.size() > bb.size() - 1 ? a.size() - bb.size() + 1 : 0, Rat(0));
  while (a.size() >= bb.size()) {
    Rat f = a.back() / bb.back();
    size_t shift = a.size() - bb.size();
    q[shift] = f;
    for (size_t i = 0; i < bb.size(); ++i) a[shift + i] -= f * bb[i];
    poly_trim(a);
    if (a.size() >= bb.size() && a.size() + bb.size() == 0) break;
  }
  r = a;
}

std::mutex g_cyclo_mutex;
std::map<long, std::vector<Rat>> g_cyclo_cache;

}  // namespace

const std::vector<Rat>& cyclotomic_poly(long n) {
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  auto it = g_cyclo_cache.find(n);
  if (it != g_cyclo_cache.end()) return it->second;
  // build Phi_d for all divisors d of n in increasing order:
  // Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e of d
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0 || g_cyclo_cache.count(d)) continue;
    std::vector<Rat> num(static_cast<size_t>(d) + 1, Rat(0));
    num[0] = -1;
    num[static_cast<size_t>(d)] = 1;
    std::vector<Rat> den{Rat(1)};
    for (long e = 1; e < d; ++e)
      if (d % e == 0) den = poly_mul(den, g_cyclo_cache.at(e));
    std::vector<Rat> q, r;
    poly_divmod(num, den, q, r);
    poly_trim(r);
    if (!r.empty()) throw internal_error("cyclotomic polynomial division not exact");
    g_cyclo_cache.emplace(d, std::move(q));
  }
  return g_cyclo_cache.at(n);
}

void Scalar::reduce_(std::vector<Rat>& raw) const {
  const std::vector<Rat>& phi = cyclotomic_poly(n_);
  const size_t deg = phi.size() - 1;  // = euler_phi(n_)
  // phi is monic; synthetic reduction from the top
  for (size_t i = raw.size(); i-- > deg;) {
    if (raw[i] == 0) continue;
    Rat f = raw[i];
    for (size_t j = 0; j < phi.size(); ++j) raw[i - deg + j] -= f * phi[j];
  }
  raw.resize(static_cast<size_t>(n_), Rat(0));
  for (size_t i = deg; i < raw.size(); ++i) raw[i] = 0;
}

Scalar::Scalar(const Rat& r, long conductor) : n_(conductor), c_(conductor, Rat(0)) {
  if (conductor < 1) throw math_error("conductor must be positive");
  c_[0] = r;
  c_[0].canonicalize();
}

Scalar::Scalar(long num, long den) : Scalar(Rat(num, den), 1) {
  if (den == 0) throw math_error("zero denominator");
}

Scalar Scalar::root_of_unity(long N, long k) {
  if (N < 1) throw math_error("conductor must be positive");
  k %= N;
  if (k < 0) k += N;
  std::vector<Rat> raw(static_cast<size_t>(N) + 1, Rat(0));
  raw[static_cast<size_t>(k)] = 1;
  Scalar s(Rat(0), N);
  s.reduce_(raw);
  s.c_ = std::move(raw);
  return s;
}

Scalar Scalar::from_coeffs(long N, std::vector<Rat> coeffs) {
  Scalar s(Rat(0), N);
  for (auto& c : coeffs) c.canonicalize();
  s.reduce_(coeffs);
  s.c_ = std::move(coeffs);
  return s;
}

bool Scalar::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Scalar::rational_value() const {
  if (!is_rational()) {
    // the canonical form can hide rationality only through shrink
    Scalar s = shrink();
    if (s.conductor() == 1 || s.is_rational()) return s.c_[0];
    throw math_error("Scalar is not rational: " + str());
  }
  return c_[0];
}

Scalar Scalar::lift(long M) const {
  if (M == n_) return *this;
  if (M % n_ != 0) throw math_error("lift target conductor not a multiple");
  long step = M / n_;
  std::vector<Rat> raw(static_cast<size_t>(M), Rat(0));
  for (size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != 0) raw[j * static_cast<size_t>(step)] += c_[j];
  Scalar s(Rat(0), M);
  s.reduce_(raw);
  s.c_ = std::move(raw);
  return s;
}

Scalar Scalar::shrink() const {
  for (long d = 1; d < n_; ++d) {
    if (n_ % d != 0) continue;
    // check Galois invariance under sigma_k, k = 1 mod d, gcd(k, n) = 1
    bool fixed = true;
    for (long k = 1 + d; k < n_ && fixed; k += d) {
      if (std::gcd(k, n_) != 1) continue;
      // sigma_k: zeta^j -> zeta^{jk}
      std::vector<Rat> raw(static_cast<size_t>(2 * n_), Rat(0));
      for (size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != 0) raw[(j * static_cast<size_t>(k)) % n_] += c_[j];
      Scalar im(Rat(0), n_);
      im.reduce_(raw);
      im.c_ = std::move(raw);
      if (!(im == *this)) fixed = false;
    }
    if (!fixed) continue;
    // solve for the representation over Q(zeta_d): columns are lifts of zeta_d^j
    long pd = euler_phi(d), pn = euler_phi(n_);
    std::vector<Scalar> cols;
    for (long j = 0; j < pd; ++j) cols.push_back(Scalar::root_of_unity(d, j).lift(n_));
    // Gaussian elimination over Q on the pn x pd system
    std::vector<std::vector<Rat>> m(static_cast<size_t>(pn), std::vector<Rat>(static_cast<size_t>(pd) + 1, Rat(0)));
    for (long i = 0; i < pn; ++i) {
      for (long j = 0; j < pd; ++j) m[i][j] = cols[j].c_[i];
      m[i][pd] = c_[i];
    }
    std::vector<long> pivot_col(static_cast<size_t>(pn), -1);
    long row = 0;
    for (long col = 0; col < pd && row < pn; ++col) {
      long pr = -1;
      for (long i = row; i < pn; ++i)
        if (m[i][col] != 0) { pr = i; break; }
      if (pr < 0) continue;
      std::swap(m[row], m[static_cast<size_t>(pr)]);
      Rat inv = 1 / m[row][col];
      for (long j = col; j <= pd; ++j) m[row][j] *= inv;
      for (long i = 0; i < pn; ++i) {
        if (i == row || m[i][col] == 0) continue;
        Rat f = m[i][col];
        for (long j = col; j <= pd; ++j) m[i][j] -= f * m[row][j];
      }
      pivot_col[row] = col;
      ++row;
    }
    bool consistent = true;
    for (long i = row; i < pn; ++i)
      if (m[i][pd] != 0) consistent = false;
    if (!consistent) continue;
    std::vector<Rat> sol(static_cast<size_t>(d), Rat(0));
    for (long i = 0; i < row; ++i)
      if (pivot_col[i] >= 0) sol[pivot_col[i]] = m[i][pd];
    Scalar out(Rat(0), d);
    out.reduce_(sol);
    out.c_ = std::move(sol);
    return out;
  }
  return *this;
}

Scalar Scalar::operator+(const Scalar& o) const {
  long M = std::lcm(n_, o.n_);
  Scalar a = lift(M), b = o.lift(M);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar a = *this;
  for (auto& c : a.c_) c = -c;
  return a;
}

Scalar Scalar::operator*(const Scalar& o) const {
  long M = std::lcm(n_, o.n_);
  Scalar a = lift(M), b = o.lift(M);
  std::vector<Rat> raw(2 * a.c_.size(), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      raw[i + j] += a.c_[i] * b.c_[j];
    }
  }
  Scalar out(Rat(0), M);
  out.reduce_(raw);
  out.c_ = std::move(raw);
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw math_error("division by zero in Q(zeta_" + std::to_string(n_) + ")");
  // extended Euclid between the coefficient polynomial and Phi_n (irreducible
  // over Q, so the gcd is a nonzero constant)
  std::vector<Rat> r0 = cyclotomic_poly(n_);
  std::vector<Rat> r1(c_.begin(), c_.end());
  poly_trim(r1);
  std::vector<Rat> s0{}, s1{Rat(1)};  // coefficients of *this in the Bezout identity
  while (true) {
    poly_trim(r1);
    if (r1.empty()) throw internal_error("gcd with cyclotomic polynomial vanished");
    if (r1.size() == 1) break;
    std::vector<Rat> q, r;
    poly_divmod(r0, r1, q, r);
    std::vector<Rat> qs = poly_mul(q, s1);
    std::vector<Rat> s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rat g = r1[0];
  std::vector<Rat> inv = s1;
  for (auto& c : inv) c /= g;
  Scalar out(Rat(0), n_);
  out.reduce_(inv);
  inv.resize(static_cast<size_t>(n_), Rat(0));
  out.c_ = std::move(inv);
  return out;
}

Scalar Scalar::conjugate() const {
  std::vector<Rat> raw(static_cast<size_t>(2 * n_), Rat(0));
  for (size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != 0) raw[(static_cast<size_t>(n_) - j) % n_] += c_[j];
  Scalar out(Rat(0), n_);
  out.reduce_(raw);
  out.c_ = std::move(raw);
  return out;
}

bool Scalar::operator==(const Scalar& o) const {
  long M = std::lcm(n_, o.n_);
  Scalar a = lift(M), b = o.lift(M);
  return a.c_ == b.c_;
}

bool Scalar::operator<(const Scalar& o) const {
  long M = std::lcm(n_, o.n_);
  Scalar a = lift(M), b = o.lift(M);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Scalar::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    Rat v = c_[j];
    if (first) {
      if (v < 0) { os << "-"; v = -v; }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (j == 0) {
      os << v.get_str();
    } else {
      if (v != 1) os << v.get_str() << "*";
      os << "z";
      if (j > 1) os << "^" << j;
    }
  }
  if (first) os << "0";
  os << " (mod " << n_ << ")";
  return os.str();
}

Scalar Scalar::parse(const std::string& s) {
  auto mod_pos = s.rfind("(mod ");
  if (mod_pos == std::string::npos) throw parse_error("Scalar string lacks conductor: " + s);
  auto close = s.find(')', mod_pos);
  if (close == std::string::npos) throw parse_error("Scalar string lacks ')': " + s);
  long N = 0;
  try {
    N = std::stol(s.substr(mod_pos + 5, close - mod_pos - 5));
  } catch (const std::exception&) {
    throw parse_error("bad conductor in Scalar string: " + s);
  }
  if (N < 1) throw parse_error("bad conductor in Scalar string: " + s);
  std::string body = s.substr(0, mod_pos);
  std::vector<Rat> raw(static_cast<size_t>(N), Rat(0));
  // tokenize into signed terms
  size_t i = 0;
  int pending_sign = 1;
  auto skip_ws = [&] { while (i < body.size() && isspace(static_cast<unsigned char>(body[i]))) ++i; };
  skip_ws();
  if (i >= body.size()) throw parse_error("empty Scalar string");
  while (i < body.size()) {
    skip_ws();
    if (i >= body.size()) break;
    if (body[i] == '+') { pending_sign = 1; ++i; skip_ws(); }
    else if (body[i] == '-') { pending_sign = -1; ++i; skip_ws(); }
    size_t start = i;
    while (i < body.size() && body[i] != '+' && body[i] != '-') ++i;
    std::string term = body.substr(start, i - start);
    while (!term.empty() && isspace(static_cast<unsigned char>(term.back()))) term.pop_back();
    if (term.empty()) throw parse_error("empty term in Scalar string: " + s);
    Rat coeff(1);
    long power = 0;
    auto zpos = term.find('z');
    if (zpos == std::string::npos) {
      try { coeff = Rat(term); } catch (const std::exception&) { throw parse_error("bad coefficient: " + term); }
    } else {
      std::string cpart = term.substr(0, zpos);
      while (!cpart.empty() && (isspace(static_cast<unsigned char>(cpart.back())) || cpart.back() == '*'))
        cpart.pop_back();
      if (!cpart.empty()) {
        try { coeff = Rat(cpart); } catch (const std::exception&) { throw parse_error("bad coefficient: " + term); }
      }
      std::string ppart = term.substr(zpos + 1);
      if (!ppart.empty()) {
        if (ppart[0] != '^') throw parse_error("bad power syntax: " + term);
        try { power = std::stol(ppart.substr(1)); } catch (const std::exception&) {
          throw parse_error("bad power: " + term);
        }
      } else {
        power = 1;
      }
    }
    if (power < 0 || power >= N) throw parse_error("power out of range in Scalar string: " + s);
    coeff.canonicalize();
    raw[static_cast<size_t>(power)] += pending_sign < 0 ? Rat(-coeff) : coeff;
    pending_sign = 1;
  }
  return Scalar::from_coeffs(N, std::move(raw));
}

std::optional<Scalar> Scalar::sqrt_rational(const Rat& r, long N) {
  if (r == 0) return Scalar::zero(N);
  bool negative = r < 0;
  Rat a = abs(r);
  mpz_class num = a.get_num(), den = a.get_den();
  mpz_class m = num * den;  // sqrt(num/den) = sqrt(num*den)/den
  mpz_class outer = 1, square_free = 1;
  for (mpz_class p = 2; p * p <= m; ++p) {
    long e = 0;
    while (m % p == 0) { m /= p; ++e; }
    if (e == 0) continue;
    for (long i = 0; i < e / 2; ++i) outer *= p;
    if (e % 2) square_free *= p;
  }
  if (m > 1) square_free *= m;
  Scalar acc = Scalar(Rat(outer, den), N);
  auto need_i = [&]() -> std::optional<Scalar> {
    if (N % 4 != 0) return std::nullopt;
    return Scalar::root_of_unity(N, N / 4);
  };
  // factor square_free (a product of distinct primes) and handle each
  std::vector<long> primes;
  {
    mpz_class sf = square_free;
    for (mpz_class p = 2; sf > 1; ++p) {
      if (p * p > sf) p = sf;
      if (sf % p != 0) continue;
      sf /= p;
      primes.push_back(p.get_si());
    }
  }
  for (long lp : primes) {
    if (lp == 2) {
      if (N % 8 != 0) return std::nullopt;
      acc = acc * (Scalar::root_of_unity(N, N / 8) + Scalar::root_of_unity(N, N - N / 8));
    } else {
      if (N % lp != 0) return std::nullopt;
      // Gauss sum: g^2 = (-1)^((p-1)/2) * p
      Scalar g = Scalar::zero(N);
      for (long j = 1; j < lp; ++j) {
        // Legendre symbol via Euler's criterion
        long pw = 1;
        for (long e = 0; e < (lp - 1) / 2; ++e) pw = (pw * j) % lp;
        Scalar term = Scalar::root_of_unity(N, (N / lp) * j);
        g = (pw == 1) ? g + term : g - term;
      }
      if (lp % 4 == 3) {
        // g^2 = -p, so sqrt(p) = g / i
        auto iu = need_i();
        if (!iu) return std::nullopt;
        acc = acc * g * iu->inverse();
      } else {
        acc = acc * g;
      }
    }
  }
  if (negative) {
    auto iu = need_i();
    if (!iu) return std::nullopt;
    acc = acc * *iu;
  }
  if (!(acc * acc == Scalar(r, 1))) throw internal_error("sqrt_rational produced a wrong root");
  return acc;
}

Scalar operator*(const Rat& r, const Scalar& s) { return Scalar(r, 1) * s; }

}  // namespace gcat
