#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace hypersum {

/// Interned variable names. `n` and `k` are the distinguished recurrence and
/// summation variables; every other symbol is a free parameter (a, b, c, x,
/// z, ...). The intern order fixes the canonical variable order used by the
/// monomial order, so all normal forms are deterministic within a process.
class Symbol {
public:
    static Symbol n();
    static Symbol k();
    static Symbol intern(const std::string& name);

    uint32_t id() const { return id_; }
    const std::string& name() const;

    bool is_n() const { return id_ == 0; }
    bool is_k() const { return id_ == 1; }
    bool is_parameter() const { return id_ >= 2; }

    auto operator<=>(const Symbol&) const = default;

private:
    explicit Symbol(uint32_t id) : id_(id) {}
    uint32_t id_;
};

}  // namespace hypersum
