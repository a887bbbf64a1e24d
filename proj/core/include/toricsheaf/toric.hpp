#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace toricsheaf {

using IntVector = std::vector<std::int64_t>;

// A character m in M = Z^dim.
using Character = IntVector;

struct ProjectiveSpace {
  int n = 1;
};

struct Hirzebruch {
  int a = 0;
};

// V_s(a_1, ..., a_r) = P(O + O(a_1) + ... + O(a_r)) over P^s.
struct SplitBundle {
  int s = 1;
  std::vector<int> a;
};

using VarietySpec = std::variant<ProjectiveSpace, Hirzebruch, SplitBundle>;

enum class Family { ProjectiveSpace, SplitBundle };

// Element of Cl(X) in the basis of the owning variety: the single degree d for
// P^n, and (p, q) = p[D_rho0] + q[D_eta0] for split bundles.
struct ClassElement {
  IntVector coordinates;

  ClassElement& operator+=(const ClassElement& other);
  friend ClassElement operator+(ClassElement a, const ClassElement& b) { return a += b; }
  friend ClassElement operator-(const ClassElement& a);
  friend bool operator==(const ClassElement&, const ClassElement&) = default;
};

struct Cone {
  std::vector<std::size_t> rays;  // sorted ray indices
  std::size_t codim = 0;

  friend bool operator==(const Cone&, const Cone&) = default;
};

// Fan data for one of the supported smooth complete toric varieties. Rays are
// ordered rho_0..rho_s, eta_0..eta_r for split bundles (Hirzebruch(a) is
// SplitBundle(1, (a))) and rho_0..rho_n for P^n.
class ToricVariety {
 public:
  Family family() const { return family_; }
  std::size_t dim() const { return dim_; }
  std::size_t ray_count() const { return rays_.size(); }
  std::size_t class_rank() const { return ray_count() - dim(); }

  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<std::string>& ray_names() const { return ray_names_; }
  // [D_rho] for every ray; the Cox ring variable degrees.
  const std::vector<ClassElement>& ray_degrees() const { return degrees_; }

  bool is_split_bundle() const { return family_ == Family::SplitBundle; }
  // Split-bundle parameters; s = n, r = 0 is never used for P^n.
  int s() const { return s_; }
  int r() const { return static_cast<int>(a_.size()); }
  const std::vector<int>& a() const { return a_; }
  std::size_t rho_index(int t) const { return static_cast<std::size_t>(t); }
  std::size_t eta_index(int u) const { return static_cast<std::size_t>(s_ + 1 + u); }

  std::int64_t pairing(const Character& m, std::size_t ray) const;
  // phi(m) = (<m, n(rho)>)_rho.
  IntVector embed(const Character& m) const;

  // Every cone of the fan, zero cone first, grouped by number of rays.
  const std::vector<Cone>& cones() const { return cones_; }
  std::vector<Cone> maximal_cones() const;

  // Weil divisor coefficients a_rho of the fixed representative of `c`:
  // p on rho_0 and q on eta_0 (split bundles), d on rho_0 (P^n).
  IntVector twist_divisor(const ClassElement& c) const;
  // Class of the divisor sum a_rho D_rho.
  ClassElement divisor_class(const IntVector& coeffs) const;

  std::size_t ray_index(const std::string& name) const;
  std::string describe() const;

  friend bool operator==(const ToricVariety&, const ToricVariety&) = default;

 private:
  friend ToricVariety build_variety(const VarietySpec& spec);

  Family family_ = Family::ProjectiveSpace;
  std::size_t dim_ = 0;
  int s_ = 0;
  std::vector<int> a_;
  std::vector<IntVector> rays_;
  std::vector<std::string> ray_names_;
  std::vector<ClassElement> degrees_;
  std::vector<Cone> cones_;
};

// Throws InputError for n < 1, a < 0, s < 1, an empty, negative or
// non-increasing weight list.
ToricVariety build_variety(const VarietySpec& spec);

}  // namespace toricsheaf
