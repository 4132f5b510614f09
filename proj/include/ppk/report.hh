#ifndef PPK_REPORT_HH
#define PPK_REPORT_HH 1

#include <ppk/pipeline.hh>

#include <string>

namespace ppk
{
    inline constexpr int report_schema = 1;

    /// Pretty-printed JSON with "schema": 1 and a trailing newline. The run
    /// time is written only when asked for, so reports are reproducible.
    auto report_to_json(const PurePairReport & report, bool with_timings = false) -> std::string;

    /// Throws ParseError on malformed JSON, a missing field or another schema.
    auto report_from_json(const std::string & text) -> PurePairReport;

    /// check_report on a serialized report; empty when it holds.
    auto verify_report(const std::string & text, const OrderedBigraph & host) -> std::string;
}

#endif
