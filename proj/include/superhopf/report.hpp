#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace superhopf {

enum class Status { Pass, Fail, Inconclusive };

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "PASS";
    case Status::Fail:
        return "FAIL";
    default:
        return "INCONCLUSIVE";
    }
}

struct Witness {
    std::string input;
    std::string expected;
    std::string actual;
};

struct CertificateReport {
    static constexpr std::size_t max_witnesses = 20;

    std::string check_name;
    std::string inputs;
    Status status = Status::Pass;
    std::vector<Witness> witnesses;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::string> notes;
    std::size_t cases = 0;
    std::size_t failures = 0;

    bool passed() const { return status == Status::Pass; }

    CertificateReport& param(std::string key, std::string value)
    {
        parameters.emplace_back(std::move(key), std::move(value));
        return *this;
    }

    // Records one evaluated case; a failing case turns the report red.
    void record(bool ok, const std::string& input, const std::string& expected, const std::string& actual)
    {
        ++cases;
        if (ok)
            return;
        ++failures;
        status = Status::Fail;
        if (witnesses.size() < max_witnesses)
            witnesses.push_back({input, expected, actual});
    }
};

// One "CHECK <name> <STATUS>" header per report, details indented.
inline void write_report(std::ostream& out, const CertificateReport& r)
{
    out << "CHECK " << r.check_name << ' ' << to_string(r.status) << '\n';
    if (!r.inputs.empty())
        out << "  inputs: " << r.inputs << '\n';
    for (const auto& [k, v] : r.parameters)
        out << "  param " << k << '=' << v << '\n';
    out << "  cases " << r.cases << " failures " << r.failures << '\n';
    for (const auto& n : r.notes)
        out << "  note " << n << '\n';
    for (const auto& w : r.witnesses)
        out << "  witness input=" << w.input << " expected=" << w.expected << " actual=" << w.actual << '\n';
}

inline void write_summary(std::ostream& out, const std::vector<CertificateReport>& reports)
{
    std::size_t failed = 0;
    for (const auto& r : reports)
        failed += r.status == Status::Fail ? 1 : 0;
    out << "checks=" << reports.size() << '\n';
    out << "failed=" << failed << '\n';
    for (const auto& r : reports)
        out << "check." << r.check_name << '=' << to_string(r.status) << '\n';
}

inline std::string to_string(const CertificateReport& r)
{
    std::ostringstream s;
    write_report(s, r);
    return s.str();
}

} // namespace superhopf
