#include "plqo/hilbert.hpp"

namespace plqo {

template class BasicPqv<ComplexScalar>;
template class BasicPqv<std::complex<double>>;
template class BasicStructure<ComplexScalar>;
template class BasicStructure<std::complex<double>>;

}  // namespace plqo
