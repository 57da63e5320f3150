#include "qperm/ncalg/poly.hpp"

namespace qperm {

template class Poly<Rational>;
template class Poly<Cyclotomic>;

}  // namespace qperm
