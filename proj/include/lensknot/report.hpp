#pragma once

#include "lensknot/serialize.hpp"

#include <json.hpp>

#include <string>

namespace lensknot {

// One CLI result: knot identity, requested computation, exact payload, any
// unit witnesses, and timing. Serialized verbatim in --format json; the
// text format prints the same mathematical content.
struct Report {
    int schema_version = 1;
    json knot = json::object();
    std::string command;
    json params = json::object();
    std::string status = "ok"; // ok | verify_failed | error
    json result = json::object();
    json witnesses = json::array();
    double elapsed_ms = 0.0;

    bool operator==(const Report &) const = default;
};

inline json to_json(const Report &r)
{
    return json{{"schema_version", r.schema_version},
                {"knot", r.knot},
                {"command", r.command},
                {"params", r.params},
                {"status", r.status},
                {"result", r.result},
                {"witnesses", r.witnesses},
                {"elapsed_ms", r.elapsed_ms}};
}

inline Report report_from_json(const json &j)
{
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    r.knot = j.at("knot");
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params");
    r.status = j.at("status").get<std::string>();
    r.result = j.at("result");
    r.witnesses = j.at("witnesses");
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

} // namespace lensknot
