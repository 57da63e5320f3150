#include "qperm/rewrite/system.hpp"

namespace qperm {

template class RewriteSystem<Rational>;
template class RewriteSystem<Cyclotomic>;

}  // namespace qperm
