#include "assoclab/torus.h"

namespace assoclab {

namespace {

RationalMatrix FromInts(std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix m;
  for (const auto& row : rows) {
    std::vector<mpq_class> r;
    for (int x : row) r.emplace_back(x);
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

RationalMatrix TorusMap() {
  return FromInts({{0, 0, -1, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}, {1, 0, 1, 0}});
}

RationalMatrix TorusReferenceInducedMatrix() {
  return FromInts({{0, 0, 0, 0, 1, 0},
                   {0, 0, 1, 0, 0, 0},
                   {0, 0, 0, 0, 0, -1},
                   {-1, 0, 0, 0, -1, 0},
                   {0, 0, 0, -1, 0, 0},
                   {0, -1, 0, 0, 0, -1}});
}

FormElement Omega0() { return FormElement::Basis(4, {1, 2}) + FormElement::Basis(4, {3, 4}); }

FormElement Omega1() {
  return FormElement::Basis(4, {2, 4}) - FormElement::Basis(4, {1, 2}) - FormElement::Basis(4, {1, 3});
}

FormElement OmegaT() {
  const PolyScalar t = PolyScalar::T();
  return t * Omega1() + (PolyScalar(1) - t) * Omega0();
}

FormElement VolumeForm4() { return FormElement::Basis(4, {1, 2, 3, 4}); }

PolyScalar TorusQuadratic() { return PolyScalar(std::vector<mpq_class>{1, -3, 3}); }

}  // namespace assoclab
