#include "hypersum/symbols.hpp"

#include "hypersum/rational.hpp"

#include <mutex>
#include <unordered_map>
#include <vector>

namespace hypersum {

namespace {

struct Registry {
    std::mutex mutex;
    std::vector<std::string> names{"n", "k"};
    std::unordered_map<std::string, uint32_t> ids{{"n", 0}, {"k", 1}};
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

Symbol Symbol::n() { return Symbol(0); }
Symbol Symbol::k() { return Symbol(1); }

Symbol Symbol::intern(const std::string& name) {
    if (name.empty()) throw Error("empty symbol name");
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    auto it = reg.ids.find(name);
    if (it != reg.ids.end()) return Symbol(it->second);
    uint32_t id = static_cast<uint32_t>(reg.names.size());
    reg.names.push_back(name);
    reg.ids.emplace(name, id);
    return Symbol(id);
}

const std::string& Symbol::name() const {
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    return reg.names.at(id_);
}

}  // namespace hypersum
