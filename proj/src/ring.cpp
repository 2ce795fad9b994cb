#include "susp/ring.hpp"

#include "susp/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace susp {

namespace {

bool valid_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

RingSpec::RingSpec(std::vector<std::string> variables) : variables_(std::move(variables)) {
    std::set<std::string> seen;
    for (const auto& v : variables_) {
        if (!valid_identifier(v)) throw Error(ErrorCode::InvalidArgument, "invalid variable name '" + v + "'");
        if (!seen.insert(v).second) throw Error(ErrorCode::InvalidArgument, "duplicate variable name '" + v + "'");
    }
}

std::optional<std::size_t> RingSpec::index_of(const std::string& name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - variables_.begin());
}

std::string RingSpec::to_string() const {
    std::string out = "QQ[";
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (i) out += ",";
        out += variables_[i];
    }
    return out + "]";
}

RingPtr make_ring(std::vector<std::string> variables) {
    return std::make_shared<const RingSpec>(std::move(variables));
}

RingPtr parse_ring_spec(const std::string& text) {
    std::string s = trim(text);
    auto open = s.find('[');
    if (open != std::string::npos) {
        std::string field = trim(s.substr(0, open));
        if (field != "QQ" && field != "Q") {
            throw Error(ErrorCode::InvalidArgument, "unsupported coefficient field '" + field + "' (only QQ)");
        }
        if (s.back() != ']') throw Error(ErrorCode::InvalidArgument, "malformed ring spec '" + text + "'");
        s = s.substr(open + 1, s.size() - open - 2);
    }
    std::vector<std::string> vars;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        std::string item = trim(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (!item.empty()) vars.push_back(item);
        else if (comma != std::string::npos) throw Error(ErrorCode::InvalidArgument, "empty variable name in '" + text + "'");
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (vars.empty()) throw Error(ErrorCode::InvalidArgument, "ring spec '" + text + "' declares no variables");
    return make_ring(std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || *a == *b;
}

}  // namespace susp
