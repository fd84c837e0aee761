#include "bnfourier/spectrum.hpp"

#include <bit>
#include <string>

#include "bnfourier/error.hpp"

namespace bnf {

namespace {

void check_arity(unsigned expected, std::size_t got, const char* what) {
  if (got != expected) {
    throw InputError(std::string(what) + " has " + std::to_string(got) + " entries, expected " +
                     std::to_string(expected));
  }
}

void check_signs(std::span<const int> x) {
  for (int v : x) {
    if (v != 1 && v != -1) throw InputError("assignment entries must be +1 or -1");
  }
}

}  // namespace

Spectrum::Spectrum(unsigned arity, std::vector<double> coeffs) : arity_(arity), coeffs_(std::move(coeffs)) {
  if (arity > kMaxArity) throw CapExceeded("spectrum arity too large", arity, kMaxArity);
  if (coeffs_.size() != (std::size_t{1} << arity)) {
    throw InputError("spectrum of arity " + std::to_string(arity) + " needs 2^arity coefficients");
  }
}

double Spectrum::weight() const {
  double total = 0.0;
  for (double c : coeffs_) total += c * c;
  return total;
}

double Spectrum::weight_within(SubsetMask a) const {
  a = a & SubsetMask::full(arity_);
  double total = 0.0;
  // Enumerate the submasks of a, including the empty set.
  for (std::uint64_t s = a.bits;; s = (s - 1) & a.bits) {
    total += coeffs_[s] * coeffs_[s];
    if (s == 0) break;
  }
  return total;
}

double basis_eval(SubsetMask s, std::span<const int> x, const ProductDist& d) {
  check_arity(d.arity(), x.size(), "assignment");
  check_signs(x);
  if (!s.within(d.arity())) throw InputError("subset mask exceeds distribution arity");
  double out = 1.0;
  for (unsigned i : s.members()) out *= d.basis_factor(i, x[i]);
  return out;
}

Spectrum transform(const BoolFn& f, const ProductDist& d, unsigned cap) {
  const unsigned n = f.arity();
  if (n > cap) {
    throw CapExceeded("transform arity " + std::to_string(n) + " exceeds the arity cap of " + std::to_string(cap),
                      n, cap);
  }
  check_arity(n, d.arity(), "distribution");
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> a(size);
  for (std::size_t x = 0; x < size; ++x) a[x] = f.bit(x) ? 1.0 : -1.0;

  // Stage i replaces the pair (g(x_i=-1), g(x_i=+1)) by its projections onto
  // 1 and (x_i - mu_i)/sigma_i under the marginal of X_i.
  for (unsigned i = 0; i < n; ++i) {
    const double q = 1.0 - d.p(i);
    const double p = d.p(i);
    const double lo_factor = q * d.basis_factor(i, -1);
    const double hi_factor = p * d.basis_factor(i, +1);
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t x = block; x < block + half; ++x) {
        const double lo = a[x];
        const double hi = a[x + half];
        a[x] = q * lo + p * hi;
        a[x + half] = lo_factor * lo + hi_factor * hi;
      }
    }
  }
  return Spectrum(n, std::move(a));
}

double reconstruct(const Spectrum& s, const ProductDist& d, std::span<const int> x) {
  const unsigned n = s.arity();
  check_arity(n, d.arity(), "distribution");
  check_arity(n, x.size(), "assignment");
  check_signs(x);
  // phi[m] = Phi_m(x), built from phi[m without its lowest bit].
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> phi(size);
  phi[0] = 1.0;
  double total = s.at(0);
  for (std::size_t m = 1; m < size; ++m) {
    const unsigned low = static_cast<unsigned>(std::countr_zero(m));
    phi[m] = phi[m & (m - 1)] * d.basis_factor(low, x[low]);
    total += s.at(m) * phi[m];
  }
  return total;
}

std::vector<double> conditional_expectations(const Spectrum& s, const ProductDist& d, SubsetMask a) {
  check_arity(s.arity(), d.arity(), "distribution");
  if (!a.within(s.arity())) throw InputError("subset mask exceeds spectrum arity");
  const auto members = a.members();
  const std::size_t k = members.size();
  const std::size_t size = std::size_t{1} << k;
  std::vector<double> v(size);
  for (std::size_t y = 0; y < size; ++y) v[y] = s.at(deposit_bits(y, a.bits));
  // Inverse butterfly: coefficient pair (c without j, c with j) -> values at x_j = -1, +1.
  for (std::size_t j = 0; j < k; ++j) {
    const double lo_factor = d.basis_factor(members[j], -1);
    const double hi_factor = d.basis_factor(members[j], +1);
    const std::size_t half = std::size_t{1} << j;
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t y = block; y < block + half; ++y) {
        const double c0 = v[y];
        const double c1 = v[y + half];
        v[y] = c0 + lo_factor * c1;
        v[y + half] = c0 + hi_factor * c1;
      }
    }
  }
  return v;
}

double conditional_expectation(const Spectrum& s, const ProductDist& d, SubsetMask a, std::span<const int> xa) {
  check_arity(s.arity(), d.arity(), "distribution");
  if (!a.within(s.arity())) throw InputError("subset mask exceeds spectrum arity");
  check_arity(a.size(), xa.size(), "partial assignment");
  check_signs(xa);
  const auto members = a.members();
  double total = 0.0;
  for (std::uint64_t sub = a.bits;; sub = (sub - 1) & a.bits) {
    double phi = 1.0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if ((sub >> members[k]) & 1u) phi *= d.basis_factor(members[k], xa[k]);
    }
    total += s.at(sub) * phi;
    if (sub == 0) break;
  }
  return total;
}

}  // namespace bnf
