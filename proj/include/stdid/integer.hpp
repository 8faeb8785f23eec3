#ifndef STDID_INTEGER_HPP
#define STDID_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace stdid {

/// Exact signed integer used for coefficients, signed sums and trail counts.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& value) { return value.str(); }

}  // namespace stdid

#endif  // STDID_INTEGER_HPP
