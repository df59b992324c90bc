#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "lieherm/complex_structure.hpp"

namespace lieherm {

/// Strictly increasing generator indices in [0, 2n): 0..n-1 are the (1,0)
/// coframe, n..2n-1 their conjugates.
using Monomial = std::vector<uint8_t>;

/// Coframe dual to a q-basis extended by sigma(q).  Carries the structure
/// constants in that basis and the d of every generator.
class Coframe {
 public:
  static std::shared_ptr<const Coframe> make(const ComplexStructure& cs,
                                             std::vector<std::string> names = {});

  const std::shared_ptr<const LieAlgebra>& algebra() const { return alg_; }
  const Involution& sigma() const { return sigma_; }
  int n() const { return n_; }
  const std::vector<Vec>& q_basis() const { return q_basis_; }
  const std::vector<std::string>& names() const { return names_; }
  std::string generator_name(int idx) const;

  /// Coordinates of an algebra vector in the (q, sigma q) basis.
  Vec coordinates(const Vec& v) const { return zinv_ * v; }

  /// d eta^C as a list of (A, B, coefficient), A < B.
  const std::vector<std::tuple<int, int, GaussRational>>& d_generator(int c) const {
    return dgen_[c];
  }

  /// d(Lambda^{1,0}) inside Lambda^{2,0} + Lambda^{1,1}.
  bool integrable() const { return integrable_; }

 private:
  std::shared_ptr<const LieAlgebra> alg_;
  Involution sigma_;
  std::vector<Vec> q_basis_;
  int n_ = 0;
  std::vector<std::string> names_;
  ExactMatrix zinv_;
  std::vector<std::vector<std::tuple<int, int, GaussRational>>> dgen_;
  bool integrable_ = false;
};

/// Exterior form over a coframe: sorted index tuples -> exact coefficients.
class ExtForm {
 public:
  explicit ExtForm(std::shared_ptr<const Coframe> cf) : cf_(std::move(cf)) {}

  static ExtForm generator(std::shared_ptr<const Coframe> cf, int idx);
  static ExtForm monomial(std::shared_ptr<const Coframe> cf, Monomial m,
                          GaussRational c);

  const std::shared_ptr<const Coframe>& coframe() const { return cf_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; 0 for the zero form.
  int degree() const;
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<Monomial, GaussRational>& terms() const { return terms_; }
  GaussRational coefficient(const Monomial& m) const;

  ExtForm operator+(const ExtForm& o) const;
  ExtForm operator-(const ExtForm& o) const;
  ExtForm operator*(const GaussRational& c) const;
  bool operator==(const ExtForm& o) const;

  ExtForm wedge(const ExtForm& o) const;
  ExtForm pow(int k) const;

  ExtForm d() const;
  ExtForm conj() const;
  bool is_real() const;

  /// (p,q) -> component, only nonzero ones.
  std::vector<std::pair<std::pair<int, int>, ExtForm>> bidegree_components() const;
  bool pure_bidegree(int* p, int* q) const;
  ExtForm part(int p, int q) const;

  ExtForm del() const;      // (p+1, q) part of d, componentwise
  ExtForm delbar() const;   // (p, q+1) part of d
  ExtForm dc() const;       // i (delbar - del)  [validated convention]
  ExtForm ddc() const { return dc().d(); }
  ExtForm deldelbar() const { return delbar().del(); }

  /// Diagonal action of J on forms: i^(q-p) on a (p,q) component.
  ExtForm j_act() const;

  /// Value on a tuple of algebra vectors (degree must match).
  GaussRational eval(const std::vector<Vec>& args) const;

  std::string str() const;
  std::string json() const;

 private:
  void add_term(const Monomial& m, const GaussRational& c);

  std::shared_ptr<const Coframe> cf_;
  std::map<Monomial, GaussRational> terms_;
};

/// Wedge of sorted monomials; false if they share an index.
bool wedge_monomials(const Monomial& a, const Monomial& b, Monomial* out,
                     int* sign);

/// d of every (1,0) coframe generator, in order.
std::vector<ExtForm> structure_equations(const std::shared_ptr<const Coframe>& cf);

/// Target equation set for the rescaling comparison: per generator, monomial
/// -> coefficient.
using EquationSet = std::vector<std::map<Monomial, GaussRational>>;

/// Finds nonzero scales c_0..c_{n-1} such that rescaling the coframe by c
/// carries `mine` onto `target` (coefficient of eta^A^eta^B in d eta^j maps by
/// c_j / (c_A c_B), conjugated scales on barred indices).  Returns the scales
/// or nothing if no diagonal rescaling matches.
std::optional<std::vector<GaussRational>> match_up_to_rescaling(
    const std::vector<ExtForm>& mine, const EquationSet& target);

/// The decomposable positive (p,p)-form prod_s (i eta^s ^ conj eta^s) over an
/// index set.
ExtForm diagonal_decomposable(const std::shared_ptr<const Coframe>& cf,
                              const std::vector<int>& idx);

/// Reference volume orientation: prod over all n generators.
ExtForm volume_form(const std::shared_ptr<const Coframe>& cf);

/// If f is a combination of diagonal decomposable (p,p)-forms with all
/// nonzero coefficients of one sign, reports that sign (+1/-1); 0 otherwise.
int diagonal_positive_combination(const ExtForm& f);

}  // namespace lieherm
