#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace oulad {

// Student identifiers are opaque decimal strings. They print exactly as they
// appear in the source data and order numerically, so sorted output matches
// the human-expected order regardless of digit count.
class StudentId {
public:
    StudentId() = default;
    explicit StudentId(std::string digits) : digits_(std::move(digits)) {}

    const std::string& str() const noexcept { return digits_; }
    bool empty() const noexcept { return digits_.empty(); }

    static bool valid(std::string_view s) {
        if (s.empty()) return false;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    }

    friend bool operator==(const StudentId& a, const StudentId& b) { return a.digits_ == b.digits_; }

    friend std::strong_ordering operator<=>(const StudentId& a, const StudentId& b) {
        std::string_view x = strip_zeros(a.digits_);
        std::string_view y = strip_zeros(b.digits_);
        if (x.size() != y.size()) return x.size() <=> y.size();
        if (int c = x.compare(y); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.digits_ <=> b.digits_;
    }

private:
    static std::string_view strip_zeros(std::string_view s) {
        std::size_t i = 0;
        while (i + 1 < s.size() && s[i] == '0') ++i;
        return s.substr(i);
    }

    std::string digits_;
};

}  // namespace oulad

template <>
struct std::hash<oulad::StudentId> {
    std::size_t operator()(const oulad::StudentId& id) const noexcept {
        return std::hash<std::string>{}(id.str());
    }
};
