#ifndef PPK_THRESHOLDS_HH
#define PPK_THRESHOLDS_HH 1

#include <cmath>

namespace ppk
{
    /// Values at or above this are treated as unbounded integer cutoffs.
    inline constexpr double cutoff_infinity = 4.0e18;

    inline constexpr double snap_tolerance = 1e-9;

    /// ceil(value), except that values within the snap tolerance of an integer
    /// become that integer.
    inline auto snap_ceil(double value) -> long long
    {
        if (! (value < cutoff_infinity))
            return static_cast<long long>(cutoff_infinity);
        double nearest = std::round(value);
        if (std::fabs(value - nearest) <= snap_tolerance)
            return static_cast<long long>(nearest);
        return static_cast<long long>(std::ceil(value));
    }

    /// snap_ceil(exp(log_value)) without overflow.
    inline auto snap_ceil_exp(double log_value) -> long long
    {
        if (log_value >= std::log(cutoff_infinity))
            return static_cast<long long>(cutoff_infinity);
        return snap_ceil(std::exp(log_value));
    }

    /// floor(value), with the same snapping as snap_ceil.
    inline auto snap_floor(double value) -> long long
    {
        if (! (value < cutoff_infinity))
            return static_cast<long long>(cutoff_infinity);
        double nearest = std::round(value);
        if (std::fabs(value - nearest) <= snap_tolerance)
            return static_cast<long long>(nearest);
        return static_cast<long long>(std::floor(value));
    }

    /// For an integer count and a real d >= 0: count <= d iff count < at_most_cutoff_log(log d).
    inline auto at_most_cutoff_log(double log_d) -> long long
    {
        if (log_d >= std::log(cutoff_infinity))
            return static_cast<long long>(cutoff_infinity);
        return snap_floor(std::exp(log_d)) + 1;
    }

    /// For an integer count and a positive real p: count < p iff count <
    /// count_cutoff(p), and count >= p iff count >= count_cutoff(p).
    inline auto count_cutoff(double p) -> long long
    {
        long long c = snap_ceil(p);
        return c < 1 ? 1 : c;
    }

    inline auto count_cutoff_log(double log_p) -> long long
    {
        long long c = snap_ceil_exp(log_p);
        return c < 1 ? 1 : c;
    }
}

#endif
