#pragma once

#include <optional>
#include <string>
#include <utility>

namespace fourfold {

// A value, or the reason it could not be concluded from the hypotheses.
template <class T>
struct Computed {
    std::optional<T> value;
    std::string reason;

    static Computed ok(T v) { return {std::move(v), {}}; }
    static Computed inconclusive(std::string why) { return {std::nullopt, std::move(why)}; }
    bool has_value() const { return value.has_value(); }
    const T& operator*() const { return *value; }
    const T* operator->() const { return &*value; }
};

}  // namespace fourfold
