// Finite chain rings of nilpotency index two with |R| <= 25.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace phg {

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RingKind { Galois, Truncated };

struct ChainRingSpec {
  RingKind kind = RingKind::Galois;
  int p = 2;
  int r = 1;
  int sigma_exp = 0;
  // Coefficients of the monic degree-r polynomial, lowest degree first,
  // leading 1 included. Digits are in [0, p).
  std::vector<int> modulus{0, 1};
  std::string name;
};

// F_q = F_p[x]/(f) in the polynomial basis; elements are coded by their
// base-p coefficient digits.
class FiniteField {
 public:
  FiniteField() = default;
  FiniteField(int p, int r, std::vector<int> modulus);
  static FiniteField standard(int q);

  int p() const { return p_; }
  int r() const { return r_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;
  int pow(int a, long long e) const;
  int frobenius(int a, int e) const;  // a^(p^e)
  bool has_root(const std::vector<int>& poly) const;

 private:
  int p_ = 0, r_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<uint8_t> add_, mul_, neg_, inv_;
};

class Ring {
 public:
  static Ring make(const ChainRingSpec& spec);

  const ChainRingSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  RingKind kind() const { return spec_.kind; }
  int p() const { return spec_.p; }
  int r() const { return spec_.r; }
  int q() const { return q_; }
  int size() const { return n_; }
  int characteristic() const { return spec_.kind == RingKind::Galois ? spec_.p * spec_.p : spec_.p; }
  bool commutative() const { return commutative_; }

  int add(int a, int b) const { return add_[a * n_ + b]; }
  int sub(int a, int b) const { return add_[a * n_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  bool is_unit(int a) const { return residue_[a] != 0; }
  bool in_radical(int a) const { return residue_[a] == 0; }
  int inv(int a) const;
  int pow(int a, long long e) const;
  int residue(int a) const { return residue_[a]; }
  // Smallest code with the given residue.
  int lift(int residue_code) const { return lift_[residue_code]; }
  const FiniteField& residue_field() const { return field_; }

  // Coordinates: Galois kind -> digits c_i in [0,p^2); Truncated -> (a, b) codes in F_q.
  std::vector<int> decode(int code) const;
  int encode(const std::vector<int>& coords) const;
  std::string format(int code) const;

  // Automorphisms as element permutations; index 0 is the identity.
  const std::vector<std::vector<int>>& automorphisms() const { return autos_; }
  int apply_auto(int idx, int a) const { return autos_[idx][a]; }

 private:
  ChainRingSpec spec_;
  int q_ = 0, n_ = 0;
  bool commutative_ = true;
  FiniteField field_;
  std::vector<uint8_t> add_, mul_, neg_, inv_, residue_, lift_;
  std::vector<std::vector<int>> autos_;

  void compute_automorphisms();
};

ChainRingSpec ring_spec(const std::string& name);
Ring ring_by_name(const std::string& name);
const std::vector<std::string>& ring_names();

std::vector<int> teichmuller_set(const Ring& ring);

// Degree-3 Galois extension GR(p^2, 3r) of a Galois ring, elements stored as
// coordinate triples over the base in the basis (1, y, y^2).
class ExtensionRing {
 public:
  using Elem = std::array<int, 3>;

  const Ring& base() const { return base_; }
  int size() const;
  const std::array<int, 4>& modulus() const { return g_; }  // monic cubic, low to high
  Elem embed(int base_code) const { return {base_code, 0, 0}; }
  Elem one() const { return {1, 0, 0}; }
  Elem basis(int i) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, long long e) const;
  bool is_unit(const Elem& a) const;
  Elem from_index(int idx) const;
  int index(const Elem& a) const;
  long long order(const Elem& a) const;  // multiplicative order of a unit

  const Elem& theta() const { return theta_; }
  // M[i][j]: coordinate i of theta * basis(j).
  const std::array<std::array<int, 3>, 3>& theta_matrix() const { return theta_matrix_; }

 private:
  friend ExtensionRing extend_ring(const Ring& ring);
  Ring base_;
  std::array<int, 4> g_{};
  Elem theta_{};
  std::array<std::array<int, 3>, 3> theta_matrix_{};
};

ExtensionRing extend_ring(const Ring& ring);

std::vector<long long> prime_factors(long long n);

}  // namespace phg
