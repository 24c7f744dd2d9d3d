#include "fareykit/slope_set.hpp"

#include <sstream>

namespace fareykit {

Integer SlopeSet::max_entry() const {
    Integer m = 0;
    for (const auto& s : members) {
        Integer e = s.max_entry();
        if (e > m) {
            m = std::move(e);
        }
    }
    return m;
}

SlopeSet parse_slope_list(std::string_view text) {
    SlopeSet out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream words(line);
        std::string head;
        if (!(words >> head)) {
            continue;
        }
        try {
            if (head == "certified_bound") {
                std::uint64_t bound = 0;
                std::string extra;
                if (!(words >> bound) || (words >> extra) || out.certified_bound) {
                    throw Error(ErrorKind::ParseError, "bad certified_bound line");
                }
                out.certified_bound = bound;
                continue;
            }
            std::string extra;
            if (words >> extra) {
                throw Error(ErrorKind::ParseError, "expected one slope per line");
            }
            out.members.insert(parse_slope(head));
        } catch (const Error& e) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::string format_slope_list(const SlopeSet& set) {
    std::string out;
    if (set.certified_bound) {
        out += "certified_bound " + std::to_string(*set.certified_bound) + "\n";
    }
    for (const auto& s : set.members) {
        out += to_string(s);
        out += '\n';
    }
    return out;
}

}  // namespace fareykit
