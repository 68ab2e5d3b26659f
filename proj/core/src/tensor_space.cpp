#include "trimspec/tensor_space.hpp"

#include <stdexcept>

namespace trimspec {

TensorSplineSpace::TensorSplineSpace(std::vector<SplineSpace1D> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty() || factors_.size() > 2)
    throw std::invalid_argument("TensorSplineSpace: 1 or 2 factors");
}

int TensorSplineSpace::dim() const {
  int n = 1;
  for (const auto& f : factors_) n *= f.dim();
  return n;
}

int TensorSplineSpace::linear_index(const Idx2& mi) const {
  for (int d = 0; d < num_dirs(); ++d)
    if (mi[d] < 0 || mi[d] >= factors_[d].dim())
      throw std::out_of_range("multi-index out of range");
  return num_dirs() == 1 ? mi[0] : mi[0] + factors_[0].dim() * mi[1];
}

Idx2 TensorSplineSpace::multi_index(int i) const {
  if (i < 0 || i >= dim()) throw std::out_of_range("linear index out of range");
  if (num_dirs() == 1) return {i, 0};
  const int n1 = factors_[0].dim();
  return {i % n1, i / n1};
}

int TensorSplineSpace::num_elements() const {
  int n = 1;
  for (const auto& f : factors_) n *= f.num_elements();
  return n;
}

int TensorSplineSpace::element_linear(const Idx2& me) const {
  for (int d = 0; d < num_dirs(); ++d)
    if (me[d] < 0 || me[d] >= factors_[d].num_elements())
      throw std::out_of_range("element multi-index out of range");
  return num_dirs() == 1 ? me[0] : me[0] + factors_[0].num_elements() * me[1];
}

Idx2 TensorSplineSpace::element_multi(int e) const {
  if (e < 0 || e >= num_elements()) throw std::out_of_range("element index");
  if (num_dirs() == 1) return {e, 0};
  const int m1 = factors_[0].num_elements();
  return {e % m1, e / m1};
}

std::pair<Vec2, Vec2> TensorSplineSpace::element_bounds(int e) const {
  const Idx2 me = element_multi(e);
  Vec2 lo{0.0, 0.0}, hi{0.0, 0.0};
  for (int d = 0; d < num_dirs(); ++d) {
    auto [a, b] = factors_[d].element(me[d]);
    lo[d] = a;
    hi[d] = b;
  }
  return {lo, hi};
}

double TensorSplineSpace::element_measure(int e) const {
  auto [lo, hi] = element_bounds(e);
  double m = 1.0;
  for (int d = 0; d < num_dirs(); ++d) m *= hi[d] - lo[d];
  return m;
}

TensorEval TensorSplineSpace::eval(const Vec2& x, int max_deriv) const {
  TensorEval out;
  if (num_dirs() == 1) {
    BasisEval1D e = factors_[0].eval(x[0], max_deriv);
    out.element = {e.element, 0};
    out.first = {e.first_index, 0};
    out.values = e.values;
    if (max_deriv >= 1) {
      out.grads.resize(e.derivs.size());
      for (std::size_t i = 0; i < e.derivs.size(); ++i)
        out.grads[i] = {e.derivs[i], 0.0};
    }
    return out;
  }
  BasisEval1D ex = factors_[0].eval(x[0], max_deriv);
  BasisEval1D ey = factors_[1].eval(x[1], max_deriv);
  out.element = {ex.element, ey.element};
  out.first = {ex.first_index, ey.first_index};
  const int n1 = static_cast<int>(ex.values.size());
  const int n2 = static_cast<int>(ey.values.size());
  out.values.resize(static_cast<std::size_t>(n1) * n2);
  if (max_deriv >= 1) out.grads.resize(out.values.size());
  for (int j = 0; j < n2; ++j)
    for (int i = 0; i < n1; ++i) {
      const std::size_t a = static_cast<std::size_t>(j) * n1 + i;
      out.values[a] = ex.values[i] * ey.values[j];
      if (max_deriv >= 1)
        out.grads[a] = {ex.derivs[i] * ey.values[j], ex.values[i] * ey.derivs[j]};
    }
  return out;
}

}  // namespace trimspec
