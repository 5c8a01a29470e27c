#pragma once

#include <deque>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>

namespace qtkern {

namespace detail {

struct SymbolInfo {
    std::string name;
    // Stored exponents are in units of 1/scale. The deformation parameters
    // q and t carry scale 4 so that q^{1/4}, t^{1/4} (and hence p^{1/4}) are
    // ordinary monomials.
    int scale;
};

class SymbolTable {
public:
    static SymbolTable& instance() {
        static SymbolTable table;
        return table;
    }

    const SymbolInfo* intern(std::string_view name) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = index_.find(std::string(name));
        if (it != index_.end()) return it->second;
        int scale = (name == "q" || name == "t") ? 4 : 1;
        storage_.push_back(SymbolInfo{std::string(name), scale});
        const SymbolInfo* info = &storage_.back();
        index_.emplace(info->name, info);
        return info;
    }

private:
    std::mutex mutex_;
    std::deque<SymbolInfo> storage_;
    std::unordered_map<std::string, const SymbolInfo*> index_;
};

}  // namespace detail

/// Interned variable name. Equality is pointer identity; ordering is by name
/// so that canonical forms do not depend on interning order.
class Symbol {
public:
    Symbol() : info_(detail::SymbolTable::instance().intern("_")) {}
    explicit Symbol(std::string_view name)
        : info_(detail::SymbolTable::instance().intern(name)) {}

    const std::string& name() const noexcept { return info_->name; }
    int scale() const noexcept { return info_->scale; }

    friend bool operator==(Symbol a, Symbol b) noexcept { return a.info_ == b.info_; }
    friend bool operator!=(Symbol a, Symbol b) noexcept { return a.info_ != b.info_; }
    friend bool operator<(Symbol a, Symbol b) noexcept {
        return a.info_ != b.info_ && a.info_->name < b.info_->name;
    }

    std::size_t hash() const noexcept { return std::hash<const void*>{}(info_); }

private:
    const detail::SymbolInfo* info_;
};

inline Symbol sym(std::string_view name) { return Symbol(name); }

/// Indexed symbol such as z3 or y1.
inline Symbol sym(std::string_view stem, int index) {
    return Symbol(std::string(stem) + std::to_string(index));
}

}  // namespace qtkern
