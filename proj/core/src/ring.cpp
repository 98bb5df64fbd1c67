#include "phg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace phg {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------- FiniteField

FiniteField::FiniteField(int p, int r, std::vector<int> modulus)
    : p_(p), r_(r), q_(ipow(p, r)), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw RingError("invalid prime " + std::to_string(p));
  if (r < 1 || static_cast<int>(modulus_.size()) != r + 1 || modulus_.back() != 1)
    throw RingError("modulus must be monic of degree r");
  auto digits = [&](int a) {
    std::vector<int> d(r_);
    for (int i = 0; i < r_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  };
  auto pack = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = r_ - 1; i >= 0; --i) a = a * p_ + d[i];
    return a;
  };
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a);
    std::vector<int> dn(r_);
    for (int i = 0; i < r_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<uint8_t>(pack(dn));
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b);
      std::vector<int> s(r_);
      for (int i = 0; i < r_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = static_cast<uint8_t>(pack(s));
      std::vector<int> prod(2 * r_ - 1, 0);
      for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int d = 2 * r_ - 2; d >= r_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        for (int k = 0; k <= r_; ++k) prod[d - r_ + k] = ((prod[d - r_ + k] - c * modulus_[k]) % p_ + p_) % p_;
      }
      prod.resize(r_);
      mul_[a * q_ + b] = static_cast<uint8_t>(pack(prod));
    }
  }
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) inv_[a] = static_cast<uint8_t>(b);
    if (inv_[a] == 0) throw RingError("modulus is reducible over F_p");
  }
}

FiniteField FiniteField::standard(int q) {
  switch (q) {
    case 2: return FiniteField(2, 1, {0, 1});
    case 3: return FiniteField(3, 1, {0, 1});
    case 4: return FiniteField(2, 2, {1, 1, 1});
    case 5: return FiniteField(5, 1, {0, 1});
    default: throw RingError("unsupported field order " + std::to_string(q));
  }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw RingError("inverse of zero in F_q");
  return inv_[a];
}

int FiniteField::pow(int a, long long e) const {
  int r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int FiniteField::frobenius(int a, int e) const { return pow(a, ipow(p_, e)); }

bool FiniteField::has_root(const std::vector<int>& poly) const {
  for (int x = 0; x < q_; ++x) {
    int v = 0;
    for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i) v = add(mul(v, x), poly[i]);
    if (v == 0) return true;
  }
  return false;
}

// ----------------------------------------------------------------------- Ring

Ring Ring::make(const ChainRingSpec& spec) {
  Ring R;
  R.spec_ = spec;
  if (!is_prime(spec.p)) throw RingError("invalid prime " + std::to_string(spec.p));
  if (spec.r < 1) throw RingError("r must be positive");
  R.q_ = ipow(spec.p, spec.r);
  R.n_ = R.q_ * R.q_;
  if (R.n_ > 25) throw RingError("ring order above 25 is not supported");
  if (static_cast<int>(spec.modulus.size()) != spec.r + 1 || spec.modulus.back() != 1)
    throw RingError("modulus must be monic of degree r");
  for (int c : spec.modulus)
    if (c < 0 || c >= spec.p) throw RingError("modulus digits must lie in [0,p)");
  if (spec.kind == RingKind::Galois && spec.sigma_exp != 0) throw RingError("sigma_exp applies to truncated rings only");
  if (spec.sigma_exp < 0 || spec.sigma_exp >= spec.r) throw RingError("sigma_exp out of range");
  R.field_ = FiniteField(spec.p, spec.r, spec.modulus);
  if (spec.r > 1) {
    // the modulus must have no root in the prime field (degree <= 3)
    for (int x = 0; x < spec.p; ++x) {
      int v = 0;
      for (int i = spec.r; i >= 0; --i) v = (v * x + spec.modulus[i]) % spec.p;
      if (v == 0) throw RingError("modulus is reducible over F_p");
    }
  }
  if (R.name().empty()) {
    std::ostringstream os;
    os << (spec.kind == RingKind::Galois ? "GR" : "S") << R.n_ << "_" << spec.sigma_exp;
    R.spec_.name = os.str();
  }

  const int n = R.n_, q = R.q_, p = spec.p, r = spec.r;
  R.add_.resize(n * n);
  R.mul_.resize(n * n);
  R.neg_.resize(n);
  R.residue_.resize(n);
  R.inv_.assign(n, 0);
  R.commutative_ = spec.kind == RingKind::Galois || spec.sigma_exp == 0;

  if (spec.kind == RingKind::Galois) {
    const int m = p * p;
    auto digits = [&](int a) {
      std::vector<int> d(r);
      for (int i = 0; i < r; ++i) {
        d[i] = a % m;
        a /= m;
      }
      return d;
    };
    auto pack = [&](const std::vector<int>& d) {
      int a = 0;
      for (int i = r - 1; i >= 0; --i) a = a * m + d[i];
      return a;
    };
    for (int a = 0; a < n; ++a) {
      auto da = digits(a);
      std::vector<int> dn(r), res(r);
      for (int i = 0; i < r; ++i) {
        dn[i] = (m - da[i]) % m;
        res[i] = da[i] % p;
      }
      R.neg_[a] = static_cast<uint8_t>(pack(dn));
      int rc = 0;
      for (int i = r - 1; i >= 0; --i) rc = rc * p + res[i];
      R.residue_[a] = static_cast<uint8_t>(rc);
      for (int b = 0; b < n; ++b) {
        auto db = digits(b);
        std::vector<int> s(r);
        for (int i = 0; i < r; ++i) s[i] = (da[i] + db[i]) % m;
        R.add_[a * n + b] = static_cast<uint8_t>(pack(s));
        std::vector<int> prod(2 * r - 1, 0);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % m;
        for (int d = 2 * r - 2; d >= r; --d) {
          int c = prod[d];
          if (c == 0) continue;
          for (int k = 0; k <= r; ++k) prod[d - r + k] = ((prod[d - r + k] - c * spec.modulus[k]) % m + m) % m;
        }
        prod.resize(r);
        R.mul_[a * n + b] = static_cast<uint8_t>(pack(prod));
      }
    }
  } else {
    const FiniteField& F = R.field_;
    for (int a = 0; a < n; ++a) {
      int a0 = a % q, a1 = a / q;
      R.neg_[a] = static_cast<uint8_t>(F.neg(a0) + q * F.neg(a1));
      R.residue_[a] = static_cast<uint8_t>(a0);
      for (int b = 0; b < n; ++b) {
        int b0 = b % q, b1 = b / q;
        R.add_[a * n + b] = static_cast<uint8_t>(F.add(a0, b0) + q * F.add(a1, b1));
        // (a0 + a1 X)(b0 + b1 X) = a0 b0 + (a0 b1 + a1 sigma(b0)) X
        int c0 = F.mul(a0, b0);
        int c1 = F.add(F.mul(a0, b1), F.mul(a1, F.frobenius(b0, spec.sigma_exp)));
        R.mul_[a * n + b] = static_cast<uint8_t>(c0 + q * c1);
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (!R.is_unit(a)) continue;
    for (int b = 0; b < n; ++b)
      if (R.mul(a, b) == 1 && R.mul(b, a) == 1) R.inv_[a] = static_cast<uint8_t>(b);
  }
  R.lift_.assign(q, 0);
  for (int a = n - 1; a >= 0; --a) R.lift_[R.residue_[a]] = static_cast<uint8_t>(a);
  R.compute_automorphisms();
  return R;
}

int Ring::inv(int a) const {
  if (!is_unit(a)) throw RingError("inverse of non-unit " + format(a) + " in " + name());
  return inv_[a];
}

int Ring::pow(int a, long long e) const {
  int r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<int> Ring::decode(int code) const {
  if (code < 0 || code >= n_) throw RingError("element code out of range");
  if (spec_.kind == RingKind::Truncated) return {code % q_, code / q_};
  const int m = spec_.p * spec_.p;
  std::vector<int> d(spec_.r);
  for (int i = 0; i < spec_.r; ++i) {
    d[i] = code % m;
    code /= m;
  }
  return d;
}

int Ring::encode(const std::vector<int>& coords) const {
  if (spec_.kind == RingKind::Truncated) {
    if (coords.size() != 2 || coords[0] < 0 || coords[0] >= q_ || coords[1] < 0 || coords[1] >= q_)
      throw RingError("bad truncated coordinates");
    return coords[0] + q_ * coords[1];
  }
  const int m = spec_.p * spec_.p;
  if (static_cast<int>(coords.size()) != spec_.r) throw RingError("bad Galois coordinates");
  int a = 0;
  for (int i = spec_.r - 1; i >= 0; --i) {
    if (coords[i] < 0 || coords[i] >= m) throw RingError("bad Galois coordinates");
    a = a * m + coords[i];
  }
  return a;
}

std::string Ring::format(int code) const { return std::to_string(code); }

void Ring::compute_automorphisms() {
  const int n = n_, q = q_, p = spec_.p, r = spec_.r;
  std::vector<std::vector<int>> candidates;
  if (spec_.kind == RingKind::Galois) {
    if (r == 1) {
      std::vector<int> id(n);
      for (int a = 0; a < n; ++a) id[a] = a;
      candidates.push_back(id);
    } else {
      const int m = p * p;
      for (int w = 0; w < n; ++w) {
        // h(w) = 0 in R
        int v = 0;
        for (int i = r; i >= 0; --i) {
          v = mul(v, w);
          v = add(v, spec_.modulus[i] % m);  // digits < p embed as integers
        }
        if (v != 0) continue;
        std::vector<int> map(n);
        for (int a = 0; a < n; ++a) {
          auto d = decode(a);
          int img = 0, wp = 1;
          for (int i = 0; i < r; ++i) {
            int term = 0;
            for (int k = 0; k < d[i]; ++k) term = add(term, wp);
            img = add(img, term);
            wp = mul(wp, w);
          }
          map[a] = img;
        }
        candidates.push_back(map);
      }
    }
  } else {
    // Images of a generator alpha of F_q (embedded as codes < q) and of X.
    std::vector<int> alpha_images;
    if (r == 1) {
      alpha_images.push_back(-1);
    } else {
      for (int w = 0; w < n; ++w) {
        int v = 0;
        for (int i = r; i >= 0; --i) {
          v = mul(v, w);
          int c = 0;
          for (int k = 0; k < spec_.modulus[i]; ++k) c = add(c, 1);
          v = add(v, c);
        }
        if (v == 0) alpha_images.push_back(w);
      }
    }
    for (int aw : alpha_images) {
      auto field_image = [&](int f) {
        // f in F_q coded by base-p digits; map sum f_i alpha^i -> sum f_i aw^i
        if (aw < 0) return f;
        int img = 0, wp = 1;
        for (int i = 0; i < r; ++i) {
          int digit = f % p;
          f /= p;
          int term = 0;
          for (int k = 0; k < digit; ++k) term = add(term, wp);
          img = add(img, term);
          wp = mul(wp, aw);
        }
        return img;
      };
      for (int b = 1; b < q; ++b) {
        int xw = q * b;  // b X
        std::vector<int> map(n);
        for (int a = 0; a < n; ++a) map[a] = add(field_image(a % q), mul(field_image(a / q), xw));
        candidates.push_back(map);
      }
    }
  }
  for (auto& m : candidates) {
    std::vector<char> seen(n, 0);
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (seen[m[a]]) ok = false;
      seen[m[a]] = 1;
    }
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (m[add(a, b)] != add(m[a], m[b]) || m[mul(a, b)] != mul(m[a], m[b])) ok = false;
    if (ok) autos_.push_back(m);
  }
  std::sort(autos_.begin(), autos_.end());
  autos_.erase(std::unique(autos_.begin(), autos_.end()), autos_.end());
  // identity is the lexicographically smallest permutation
}

// ---------------------------------------------------------------- catalogue

const std::vector<std::string>& ring_names() {
  static const std::vector<std::string> names{"Z4", "S2", "Z9", "S3", "G4", "S4", "T4", "Z25", "S5"};
  return names;
}

ChainRingSpec ring_spec(const std::string& raw) {
  const std::string name = upper(raw);
  ChainRingSpec s;
  s.name = name;
  if (name == "Z4") s = {RingKind::Galois, 2, 1, 0, {0, 1}, name};
  else if (name == "S2") s = {RingKind::Truncated, 2, 1, 0, {0, 1}, name};
  else if (name == "Z9") s = {RingKind::Galois, 3, 1, 0, {0, 1}, name};
  else if (name == "S3") s = {RingKind::Truncated, 3, 1, 0, {0, 1}, name};
  else if (name == "G4") s = {RingKind::Galois, 2, 2, 0, {1, 1, 1}, name};
  else if (name == "S4") s = {RingKind::Truncated, 2, 2, 0, {1, 1, 1}, name};
  else if (name == "T4") s = {RingKind::Truncated, 2, 2, 1, {1, 1, 1}, name};
  else if (name == "Z25") s = {RingKind::Galois, 5, 1, 0, {0, 1}, name};
  else if (name == "S5") s = {RingKind::Truncated, 5, 1, 0, {0, 1}, name};
  else throw RingError("unknown ring '" + raw + "' (expected one of Z4 S2 Z9 S3 G4 S4 T4 Z25 S5)");
  return s;
}

Ring ring_by_name(const std::string& name) { return Ring::make(ring_spec(name)); }

std::vector<int> teichmuller_set(const Ring& R) {
  if (R.kind() != RingKind::Galois) throw RingError("Teichmuller set requires a Galois ring");
  std::vector<int> out;
  for (int c = 0; c < R.q(); ++c) {
    int x = R.lift(c);
    int t = R.pow(x, R.q());
    while (R.pow(t, R.q()) != t) t = R.pow(t, R.q());
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------- ExtensionRing

int ExtensionRing::size() const { return base_.size() * base_.size() * base_.size(); }

ExtensionRing::Elem ExtensionRing::basis(int i) const {
  Elem e{0, 0, 0};
  e[i] = 1;
  return e;
}

ExtensionRing::Elem ExtensionRing::add(const Elem& a, const Elem& b) const {
  return {base_.add(a[0], b[0]), base_.add(a[1], b[1]), base_.add(a[2], b[2])};
}

ExtensionRing::Elem ExtensionRing::mul(const Elem& a, const Elem& b) const {
  const Ring& R = base_;
  std::array<int, 5> prod{0, 0, 0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) prod[i + j] = R.add(prod[i + j], R.mul(a[i], b[j]));
  for (int d = 4; d >= 3; --d) {
    int c = prod[d];
    if (c == 0) continue;
    for (int k = 0; k <= 3; ++k) prod[d - 3 + k] = R.sub(prod[d - 3 + k], R.mul(c, g_[k]));
  }
  return {prod[0], prod[1], prod[2]};
}

ExtensionRing::Elem ExtensionRing::pow(Elem a, long long e) const {
  Elem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool ExtensionRing::is_unit(const Elem& a) const {
  return base_.is_unit(a[0]) || base_.is_unit(a[1]) || base_.is_unit(a[2]);
}

ExtensionRing::Elem ExtensionRing::from_index(int idx) const {
  const int n = base_.size();
  return {idx % n, (idx / n) % n, idx / (n * n)};
}

int ExtensionRing::index(const Elem& a) const {
  const int n = base_.size();
  return a[0] + n * a[1] + n * n * a[2];
}

long long ExtensionRing::order(const Elem& a) const {
  const long long q = base_.q();
  const long long group = (q * q * q - 1) * q * q * q;  // |units of GR(p^2,3r)|
  long long ord = group;
  for (long long f : prime_factors(group))
    while (ord % f == 0 && pow(a, ord / f) == one()) ord /= f;
  if (pow(a, ord) != one()) throw RingError("order computation failed");
  return ord;
}

ExtensionRing extend_ring(const Ring& R) {
  if (R.kind() != RingKind::Galois) throw RingError("extend_ring requires a Galois ring");
  ExtensionRing E;
  E.base_ = R;
  const int n = R.size();
  const FiniteField& F = R.residue_field();
  bool found = false;
  for (int idx = 0; idx < n * n * n && !found; ++idx) {
    int c0 = idx % n, c1 = (idx / n) % n, c2 = idx / (n * n);
    std::vector<int> red{R.residue(c0), R.residue(c1), R.residue(c2), 1};
    if (F.has_root(red)) continue;
    E.g_ = {c0, c1, c2, 1};
    found = true;
  }
  if (!found) throw RingError("no irreducible cubic found");
  const long long q = R.q();
  const long long target = q * q * q - 1;
  found = false;
  for (int idx = 1; idx < E.size() && !found; ++idx) {
    auto a = E.from_index(idx);
    if (!E.is_unit(a)) continue;
    auto t = E.pow(a, q * q * q);
    if (E.order(t) == target) {
      E.theta_ = t;
      found = true;
    }
  }
  if (!found) throw RingError("no Teichmuller generator found");
  for (int j = 0; j < 3; ++j) {
    auto col = E.mul(E.theta_, E.basis(j));
    for (int i = 0; i < 3; ++i) E.theta_matrix_[i][j] = col[i];
  }
  return E;
}

}  // namespace phg
