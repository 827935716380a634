// The weight-range syntax of the command line, kept in the library so it
// can be unit tested.

#ifndef EISZERO_CLI_UTIL_HPP
#define EISZERO_CLI_UTIL_HPP

#include <string>
#include <vector>

namespace eiszero {

// "12" -> {12}; "4..40" -> {4,6,...,40}; "4..40/4" -> {4,8,...,40}
std::vector<long> parse_weights_spec(const std::string& spec);

}  // namespace eiszero

#endif
