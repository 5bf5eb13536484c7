#pragma once

// Unit-suffixed quantity strings ("10 nm", "1e-10 cm2/Vs") normalized to SI.

#include <charconv>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace memdrift::io {

enum class Dimension { Dimensionless, Length, Resistance, Mobility, Time, Frequency, Current,
                       Voltage, Charge, Angle };

namespace detail {

struct UnitEntry {
    std::string_view symbol;
    int exponent;  ///< scale is 10^exponent
};

inline std::optional<int> unit_exponent(Dimension dim, std::string_view unit) {
    static constexpr UnitEntry length[] = {
        {"m", 0}, {"cm", -2}, {"mm", -3}, {"um", -6}, {"nm", -9}, {"pm", -12}};
    static constexpr UnitEntry resistance[] = {
        {"ohm", 0}, {"Ohm", 0}, {"kohm", 3}, {"kOhm", 3}, {"Mohm", 6}, {"MOhm", 6}};
    static constexpr UnitEntry mobility[] = {
        {"m2/Vs", 0}, {"m2/V/s", 0}, {"cm2/Vs", -4}, {"cm2/V/s", -4}};
    static constexpr UnitEntry time[] = {
        {"s", 0}, {"ms", -3}, {"us", -6}, {"ns", -9}, {"ps", -12}};
    static constexpr UnitEntry frequency[] = {
        {"Hz", 0}, {"kHz", 3}, {"MHz", 6}, {"GHz", 9}};
    static constexpr UnitEntry current[] = {
        {"A", 0}, {"mA", -3}, {"uA", -6}, {"nA", -9}};
    static constexpr UnitEntry voltage[] = {{"V", 0}, {"mV", -3}, {"uV", -6}};
    static constexpr UnitEntry charge[] = {{"C", 0}, {"mC", -3}, {"uC", -6}, {"nC", -9}};
    static constexpr UnitEntry angle[] = {{"rad", 0}};

    auto find = [&](const auto& table) -> std::optional<int> {
        for (const auto& e : table)
            if (e.symbol == unit) return e.exponent;
        return std::nullopt;
    };
    switch (dim) {
    case Dimension::Dimensionless: return std::nullopt;
    case Dimension::Length: return find(length);
    case Dimension::Resistance: return find(resistance);
    case Dimension::Mobility: return find(mobility);
    case Dimension::Time: return find(time);
    case Dimension::Frequency: return find(frequency);
    case Dimension::Current: return find(current);
    case Dimension::Voltage: return find(voltage);
    case Dimension::Charge: return find(charge);
    case Dimension::Angle: return find(angle);
    }
    return std::nullopt;
}

// Dividing by an exact power of ten keeps "0.1 nm" at the double nearest 1e-10.
inline double scale_by_power_of_ten(double value, int exponent) {
    double power = 1.0;
    for (int k = 0; k < std::abs(exponent); ++k) power *= 10.0;
    return exponent < 0 ? value / power : value * power;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace detail

/// Parses "<number>[ ]<unit>" into SI. A bare number is taken as SI already.
/// Throws std::invalid_argument on malformed text or an unknown unit.
inline double parse_quantity(std::string_view text, Dimension dim) {
    const std::string_view s = detail::trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr == s.data())
        throw std::invalid_argument("malformed quantity '" + std::string(text) + "'");
    const std::string_view unit = detail::trim(std::string_view(ptr, s.data() + s.size() - ptr));
    if (unit.empty()) return value;
    const auto exponent = detail::unit_exponent(dim, unit);
    if (!exponent)
        throw std::invalid_argument("unknown unit '" + std::string(unit) + "' in '" +
                                    std::string(text) + "'");
    return detail::scale_by_power_of_ten(value, *exponent);
}

} // namespace memdrift::io
