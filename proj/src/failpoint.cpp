#include "codegauntlet/failpoint.hpp"

#include <map>
#include <mutex>

namespace cg::failpoint {

namespace {
std::mutex g_mutex;
std::map<std::string, int>& table() {
    static std::map<std::string, int> t;
    return t;
}
}  // namespace

void arm(const std::string& name, int after_hits) {
    std::lock_guard<std::mutex> lock(g_mutex);
    table()[name] = after_hits;
}

void clear() {
    std::lock_guard<std::mutex> lock(g_mutex);
    table().clear();
}

void fire(const std::string& name) {
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        auto it = table().find(name);
        if (it == table().end()) return;
        if (it->second > 0) {
            --it->second;
            return;
        }
        table().erase(it);
    }
    throw Injected(name);
}

std::vector<std::string> registry() {
    return {
        "atomic_write.open",
        "atomic_write.write",
        "atomic_write.flush",
        "atomic_write.sync",
        "atomic_write.rename",
        "generation_pass.after_store_write",
        "generation_pass.after_checkpoint",
        "submission_pass.after_store_write",
        "submission_pass.after_checkpoint",
    };
}

}  // namespace cg::failpoint
