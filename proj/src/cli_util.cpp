#include "eiszero/cli_util.hpp"

#include <stdexcept>

namespace eiszero {

std::vector<long> parse_weights_spec(const std::string& spec) {
    auto parse_long = [](const std::string& s) {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    };
    std::vector<long> out;
    size_t dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            out.push_back(parse_long(spec));
            return out;
        }
        long lo = parse_long(spec.substr(0, dots));
        std::string rest = spec.substr(dots + 2);
        long step = 2;
        size_t slash = rest.find('/');
        if (slash != std::string::npos) {
            step = parse_long(rest.substr(slash + 1));
            rest = rest.substr(0, slash);
        }
        long hi = parse_long(rest);
        if (step <= 0 || hi < lo) throw std::invalid_argument("bad range");
        for (long w = lo; w <= hi; w += step) out.push_back(w);
    } catch (const std::exception&) {
        throw std::domain_error("cannot parse weight specification '" + spec +
                                "' (expected K or A..B[/step])");
    }
    return out;
}

}  // namespace eiszero
