#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace susp {

// Ordered list of distinct variable names; describes Q[x_1..x_n].
class RingSpec {
public:
    explicit RingSpec(std::vector<std::string> variables);

    std::size_t size() const noexcept { return variables_.size(); }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const std::string& name(std::size_t index) const { return variables_.at(index); }
    std::optional<std::size_t> index_of(const std::string& name) const;

    // "QQ[x,y]"
    std::string to_string() const;

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.variables_ == b.variables_;
    }

private:
    std::vector<std::string> variables_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<std::string> variables);

// Accepts "QQ[x,y]", "Q[x, y]" or a bare "x,y".
RingPtr parse_ring_spec(const std::string& text);

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace susp
