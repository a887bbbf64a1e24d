#include "toricsheaf/toric.hpp"

#include "toricsheaf/errors.hpp"

#include <algorithm>
#include <sstream>

namespace toricsheaf {

ClassElement& ClassElement::operator+=(const ClassElement& other) {
  if (other.coordinates.size() != coordinates.size()) {
    throw InputError("class elements of different rank");
  }
  for (std::size_t i = 0; i < coordinates.size(); ++i) coordinates[i] += other.coordinates[i];
  return *this;
}

ClassElement operator-(const ClassElement& a) {
  ClassElement out = a;
  for (auto& x : out.coordinates) x = -x;
  return out;
}

namespace {

// Subsets of {0..k-1} other than the full set, as bitmasks.
std::vector<unsigned> proper_subsets(std::size_t k) {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask + 1 < (1u << k); ++mask) out.push_back(mask);
  return out;
}

std::vector<Cone> sorted_cones(std::vector<std::vector<std::size_t>> ray_sets, std::size_t dim) {
  std::sort(ray_sets.begin(), ray_sets.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  std::vector<Cone> cones;
  cones.reserve(ray_sets.size());
  for (auto& rays : ray_sets) {
    std::size_t codim = dim - rays.size();
    cones.push_back(Cone{std::move(rays), codim});
  }
  return cones;
}

std::vector<std::size_t> bits_to_indices(unsigned mask, std::size_t offset) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(offset + i);
  }
  return out;
}

}  // namespace

ToricVariety build_variety(const VarietySpec& spec) {
  if (const auto* h = std::get_if<Hirzebruch>(&spec)) {
    if (h->a < 0) throw InputError("Hirzebruch parameter a must be >= 0");
    return build_variety(SplitBundle{1, {h->a}});
  }
  ToricVariety v;
  if (const auto* p = std::get_if<ProjectiveSpace>(&spec)) {
    if (p->n < 1) throw InputError("projective space dimension must be >= 1");
    const auto n = static_cast<std::size_t>(p->n);
    v.family_ = Family::ProjectiveSpace;
    v.dim_ = n;
    v.s_ = p->n;
    v.rays_.push_back(IntVector(n, -1));
    v.ray_names_.push_back("rho0");
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n, 0);
      e[i] = 1;
      v.rays_.push_back(std::move(e));
      v.ray_names_.push_back("rho" + std::to_string(i + 1));
    }
    v.degrees_.assign(n + 1, ClassElement{{1}});
    std::vector<std::vector<std::size_t>> sets;
    for (unsigned mask : proper_subsets(n + 1)) sets.push_back(bits_to_indices(mask, 0));
    v.cones_ = sorted_cones(std::move(sets), n);
    return v;
  }
  const auto& sb = std::get<SplitBundle>(spec);
  if (sb.s < 1) throw InputError("split bundle base dimension s must be >= 1");
  if (sb.a.empty()) throw InputError("split bundle weight list must be nonempty");
  for (std::size_t i = 0; i < sb.a.size(); ++i) {
    if (sb.a[i] < 0) throw InputError("split bundle weights must be non-negative");
    if (i > 0 && sb.a[i] < sb.a[i - 1]) {
      throw InputError("split bundle weights must be weakly increasing");
    }
  }
  const auto s = static_cast<std::size_t>(sb.s);
  const auto r = sb.a.size();
  const std::size_t n = s + r;
  v.family_ = Family::SplitBundle;
  v.dim_ = n;
  v.s_ = sb.s;
  v.a_ = sb.a;

  // Coordinates (e_1..e_s, f_1..f_r).
  IntVector rho0(n, 0);
  for (std::size_t i = 0; i < s; ++i) rho0[i] = -1;
  for (std::size_t j = 0; j < r; ++j) rho0[s + j] = sb.a[j];
  v.rays_.push_back(rho0);
  v.ray_names_.push_back("rho0");
  v.degrees_.push_back(ClassElement{{1, 0}});
  for (std::size_t i = 0; i < s; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    v.rays_.push_back(std::move(e));
    v.ray_names_.push_back("rho" + std::to_string(i + 1));
    v.degrees_.push_back(ClassElement{{1, 0}});
  }
  IntVector eta0(n, 0);
  for (std::size_t j = 0; j < r; ++j) eta0[s + j] = -1;
  v.rays_.push_back(eta0);
  v.ray_names_.push_back("eta0");
  v.degrees_.push_back(ClassElement{{0, 1}});
  for (std::size_t j = 0; j < r; ++j) {
    IntVector f(n, 0);
    f[s + j] = 1;
    v.rays_.push_back(std::move(f));
    v.ray_names_.push_back("eta" + std::to_string(j + 1));
    v.degrees_.push_back(ClassElement{{-sb.a[j], 1}});
  }

  std::vector<std::vector<std::size_t>> sets;
  for (unsigned rho_mask : proper_subsets(s + 1)) {
    for (unsigned eta_mask : proper_subsets(r + 1)) {
      auto rays = bits_to_indices(rho_mask, 0);
      auto etas = bits_to_indices(eta_mask, s + 1);
      rays.insert(rays.end(), etas.begin(), etas.end());
      sets.push_back(std::move(rays));
    }
  }
  v.cones_ = sorted_cones(std::move(sets), n);
  return v;
}

std::int64_t ToricVariety::pairing(const Character& m, std::size_t ray) const {
  if (ray >= rays_.size()) throw InputError("ray index out of range");
  if (m.size() != dim_) throw InputError("character has wrong length");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < dim_; ++i) acc += m[i] * rays_[ray][i];
  return acc;
}

IntVector ToricVariety::embed(const Character& m) const {
  IntVector out(ray_count());
  for (std::size_t k = 0; k < ray_count(); ++k) out[k] = pairing(m, k);
  return out;
}

std::vector<Cone> ToricVariety::maximal_cones() const {
  std::vector<Cone> out;
  for (const auto& c : cones_) {
    if (c.codim == 0) out.push_back(c);
  }
  return out;
}

IntVector ToricVariety::twist_divisor(const ClassElement& c) const {
  if (c.coordinates.size() != class_rank()) {
    throw InputError("class element has rank " + std::to_string(c.coordinates.size()) +
                     ", variety class group has rank " + std::to_string(class_rank()));
  }
  IntVector coeffs(ray_count(), 0);
  coeffs[0] = c.coordinates[0];
  if (family_ == Family::SplitBundle) coeffs[eta_index(0)] = c.coordinates[1];
  return coeffs;
}

ClassElement ToricVariety::divisor_class(const IntVector& coeffs) const {
  if (coeffs.size() != ray_count()) throw InputError("divisor has wrong number of coefficients");
  ClassElement out{IntVector(class_rank(), 0)};
  for (std::size_t k = 0; k < ray_count(); ++k) {
    for (std::size_t j = 0; j < class_rank(); ++j) {
      out.coordinates[j] += coeffs[k] * degrees_[k].coordinates[j];
    }
  }
  return out;
}

std::size_t ToricVariety::ray_index(const std::string& name) const {
  auto it = std::find(ray_names_.begin(), ray_names_.end(), name);
  if (it == ray_names_.end()) throw InputError("unknown ray name \"" + name + "\"");
  return static_cast<std::size_t>(it - ray_names_.begin());
}

std::string ToricVariety::describe() const {
  std::ostringstream os;
  if (family_ == Family::ProjectiveSpace) {
    os << "P^" << dim_;
  } else if (s_ == 1 && a_.size() == 1) {
    os << "Hirzebruch(" << a_[0] << ")";
  } else {
    os << "SplitBundle(s=" << s_ << ", a=(";
    for (std::size_t i = 0; i < a_.size(); ++i) os << (i ? "," : "") << a_[i];
    os << "))";
  }
  return os.str();
}

}  // namespace toricsheaf
