#pragma once

#include <string>
#include <variant>

namespace oulad {

// Canonical shortest-round-trip rendering of a double ("12" not "12.000000").
std::string format_double(double x);

// One flat-table value: missing, integer, real, or text. Missing renders as
// an empty CSV field and as JSON null.
class Cell {
public:
    Cell() = default;

    static Cell missing() { return Cell(); }
    static Cell integer(long long x) {
        Cell c;
        c.v_ = x;
        return c;
    }
    static Cell real(double x) {
        Cell c;
        c.v_ = x;
        return c;
    }
    static Cell text(std::string s) {
        Cell c;
        c.v_ = std::move(s);
        return c;
    }

    bool is_missing() const noexcept { return std::holds_alternative<std::monostate>(v_); }
    bool is_integer() const noexcept { return std::holds_alternative<long long>(v_); }
    bool is_real() const noexcept { return std::holds_alternative<double>(v_); }
    bool is_number() const noexcept { return is_integer() || is_real(); }
    bool is_text() const noexcept { return std::holds_alternative<std::string>(v_); }

    double number() const {
        if (is_integer()) return static_cast<double>(std::get<long long>(v_));
        return std::get<double>(v_);
    }
    long long integer_value() const { return std::get<long long>(v_); }
    const std::string& text_value() const { return std::get<std::string>(v_); }

    // Unescaped field text used for CSV emission and label building.
    std::string to_field() const;

    friend bool operator==(const Cell&, const Cell&) = default;

private:
    std::variant<std::monostate, long long, double, std::string> v_;
};

}  // namespace oulad
