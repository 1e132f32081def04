#include "mzv/report_io.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace mzv {

namespace {

std::string fmt6(const Real& v) { return v.to_string(6); }

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') {
            out += '\\';
            out += ch;
        } else if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", ch);
            out += buf;
        } else {
            out += ch;
        }
    }
    out += '"';
    return out;
}

std::string params_json(const Params& p) {
    std::string out = "{";
    bool first = true;
    const auto put = [&](const char* key, const std::string& val) {
        if (!first)
            out += ",";
        first = false;
        out += "\"";
        out += key;
        out += "\":";
        out += val;
    };
    if (p.l)
        put("l", std::to_string(*p.l));
    if (p.n)
        put("n", std::to_string(*p.n));
    if (p.r)
        put("r", std::to_string(*p.r));
    if (p.part)
        put("part", std::to_string(*p.part));
    if (p.D)
        put("D", std::to_string(*p.D));
    if (p.index)
        put("index", json_quote(p.index->str()));
    if (p.x)
        put("x", json_quote(*p.x));
    if (p.y)
        put("y", json_quote(*p.y));
    if (p.z)
        put("z", json_quote(*p.z));
    out += "}";
    return out;
}

std::string params_compact(const Params& p) {
    std::ostringstream os;
    bool first = true;
    const auto put = [&](const char* key, const std::string& val) {
        if (!first)
            os << " ";
        first = false;
        os << key << "=" << val;
    };
    if (p.l)
        put("l", std::to_string(*p.l));
    if (p.n)
        put("n", std::to_string(*p.n));
    if (p.r)
        put("r", std::to_string(*p.r));
    if (p.part)
        put("part", std::to_string(*p.part));
    if (p.D)
        put("D", std::to_string(*p.D));
    if (p.index)
        put("index", p.index->str());
    if (p.x)
        put("x", *p.x);
    if (p.y)
        put("y", *p.y);
    if (p.z)
        put("z", *p.z);
    return os.str();
}

constexpr std::string_view kCsvHeader =
    "id,l,n,r,part,D,index,x,y,z,residual,tolerance,pass";

std::string csv_row(const IdentityReport& r) {
    std::ostringstream os;
    os << id_name(r.id) << ",";
    const auto opt_int = [&](const std::optional<int>& v) {
        if (v)
            os << *v;
        os << ",";
    };
    opt_int(r.params.l);
    opt_int(r.params.n);
    opt_int(r.params.r);
    opt_int(r.params.part);
    opt_int(r.params.D);
    if (r.params.index)
        os << "\"" << r.params.index->str() << "\"";
    os << ",";
    os << (r.params.x ? *r.params.x : "") << ",";
    os << (r.params.y ? *r.params.y : "") << ",";
    os << (r.params.z ? *r.params.z : "") << ",";
    os << fmt6(r.residual) << "," << fmt6(r.tolerance) << ","
       << (r.pass ? "true" : "false");
    return os.str();
}

std::string table_row(const IdentityReport& r) {
    std::ostringstream os;
    os << std::left << std::setw(15) << id_name(r.id) << " " << std::setw(36)
       << params_compact(r.params) << " " << std::setw(14) << fmt6(r.residual)
       << " " << std::setw(14) << fmt6(r.tolerance) << " " << std::setw(5)
       << (r.pass ? "ok" : "FAIL") << " " << std::right << std::fixed
       << std::setprecision(2) << std::setw(9) << r.elapsed_ms;
    return os.str();
}

std::string table_header() {
    std::ostringstream os;
    os << std::left << std::setw(15) << "id" << " " << std::setw(36) << "params"
       << " " << std::setw(14) << "residual" << " " << std::setw(14)
       << "tolerance" << " " << std::setw(5) << "pass" << " " << std::right
       << std::setw(9) << "ms";
    return os.str();
}

}  // namespace

std::optional<ReportFormat> format_from_name(std::string_view name) {
    if (name == "json")
        return ReportFormat::json;
    if (name == "csv")
        return ReportFormat::csv;
    if (name == "table")
        return ReportFormat::table;
    return std::nullopt;
}

std::string render_report(const IdentityReport& r, ReportFormat f) {
    switch (f) {
    case ReportFormat::json: {
        std::string out = "{\"id\":";
        out += json_quote(std::string(id_name(r.id)));
        out += ",\"params\":";
        out += params_json(r.params);
        out += ",\"residual\":";
        out += json_quote(fmt6(r.residual));
        out += ",\"tolerance\":";
        out += json_quote(fmt6(r.tolerance));
        out += ",\"pass\":";
        out += r.pass ? "true" : "false";
        out += "}";
        return out;
    }
    case ReportFormat::csv:
        return csv_row(r);
    case ReportFormat::table:
        return table_row(r);
    }
    return {};
}

std::string render_summary(const std::vector<IdentityReport>& rs,
                           ReportFormat f) {
    std::size_t passed = 0;
    const Real* worst = nullptr;
    for (const auto& r : rs) {
        if (r.pass)
            ++passed;
        if (!worst || r.residual > *worst)
            worst = &r.residual;
    }
    const std::size_t failed = rs.size() - passed;
    const std::string max_res = worst ? fmt6(*worst) : "0";
    if (f == ReportFormat::json) {
        std::string out = "{\"summary\":{\"checks\":";
        out += std::to_string(rs.size());
        out += ",\"passed\":";
        out += std::to_string(passed);
        out += ",\"failed\":";
        out += std::to_string(failed);
        out += ",\"max_residual\":";
        out += json_quote(max_res);
        out += "}}";
        return out;
    }
    std::ostringstream os;
    os << "summary: " << rs.size() << " checks, " << passed << " passed, "
       << failed << " failed, max residual " << max_res;
    return os.str();
}

void write_reports(std::ostream& os, const std::vector<IdentityReport>& rs,
                   ReportFormat f) {
    if (f == ReportFormat::csv)
        os << kCsvHeader << "\n";
    else if (f == ReportFormat::table)
        os << table_header() << "\n";
    for (const auto& r : rs)
        os << render_report(r, f) << "\n";
    os << render_summary(rs, f) << "\n";
}

}  // namespace mzv
