#include <ppk/report.hh>

#include <ppk/errors.hh>

#include <json.hpp>

#include <cmath>
#include <limits>

using nlohmann::json;

namespace ppk
{
    namespace
    {
        /// Infinite constants are written as null.
        auto number(double x) -> json
        {
            return std::isfinite(x) ? json(x) : json(nullptr);
        }

        auto read_number(const json & j) -> double
        {
            if (j.is_null())
                return std::numeric_limits<double>::infinity();
            return j.get<double>();
        }
    }

    auto report_to_json(const PurePairReport & r, bool with_timings) -> std::string
    {
        json j;
        j["schema"] = report_schema;
        j["mode"] = r.mode;
        j["outcome"] = r.outcome;
        j["pattern"] = { { "n1", r.pattern.n1() }, { "n2", r.pattern.n2() }, { "rows", r.pattern.to_strings() } };
        if (r.embedding)
            j["embedding"] = { { "row_map", r.embedding->row_map }, { "col_map", r.embedding->col_map } };
        else
            j["pair"] = { { "z1", r.pair.z1 }, { "z2", r.pair.z2 }, { "bound1", r.bound1 }, { "bound2", r.bound2 } };
        j["route"] = r.route;
        j["constants"] = {
            { "t", r.t },
            { "r", r.r },
            { "K", number(r.K) },
            { "eps", number(r.eps) },
            { "c", r.c },
            { "d", r.d },
            { "log_size_factor", number(r.log_size_factor) },
            { "m", r.m },
            { "J", number(r.J) },
        };
        j["degree_cap_holds"] = r.degree_cap_holds;
        j["seed"] = r.seed;
        if (with_timings && r.time_ms)
            j["time_ms"] = *r.time_ms;
        return j.dump(2) + "\n";
    }

    auto report_from_json(const std::string & text) -> PurePairReport
    {
        try {
            auto j = json::parse(text);
            if (j.at("schema").get<int>() != report_schema)
                throw ParseError("report: unsupported schema " + j.at("schema").dump());
            PurePairReport r;
            r.mode = j.at("mode").get<std::string>();
            r.outcome = j.at("outcome").get<std::string>();
            const auto & p = j.at("pattern");
            r.pattern = OrderedBigraph::from_strings(p.at("n1").get<int>(), p.at("n2").get<int>(),
                p.at("rows").get<std::vector<std::string>>());
            if (j.contains("embedding"))
                r.embedding = Embedding{ j["embedding"].at("row_map").get<std::vector<int>>(),
                    j["embedding"].at("col_map").get<std::vector<int>>() };
            if (j.contains("pair")) {
                const auto & q = j["pair"];
                r.pair.z1 = q.at("z1").get<std::vector<int>>();
                r.pair.z2 = q.at("z2").get<std::vector<int>>();
                r.bound1 = q.at("bound1").get<long long>();
                r.bound2 = q.at("bound2").get<long long>();
            }
            r.route = j.at("route").get<std::string>();
            const auto & c = j.at("constants");
            r.t = c.at("t").get<int>();
            r.r = c.at("r").get<int>();
            r.K = read_number(c.at("K"));
            r.eps = read_number(c.at("eps"));
            r.c = c.at("c").get<double>();
            r.d = c.at("d").get<long long>();
            r.log_size_factor = read_number(c.at("log_size_factor"));
            r.m = c.at("m").get<long long>();
            r.J = read_number(c.at("J"));
            r.degree_cap_holds = j.at("degree_cap_holds").get<bool>();
            r.seed = j.at("seed").get<std::uint64_t>();
            if (j.contains("time_ms"))
                r.time_ms = j["time_ms"].get<double>();
            return r;
        }
        catch (const json::exception & e) {
            throw ParseError(std::string("report: ") + e.what());
        }
    }

    auto verify_report(const std::string & text, const OrderedBigraph & host) -> std::string
    {
        return check_report(host, report_from_json(text));
    }
}
