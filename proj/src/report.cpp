#include "qexthh/report.hpp"

#include <json.hpp>

#include <sstream>

namespace qexthh {

using ordered_json = nlohmann::ordered_json;

std::string method_name(Method m) {
    switch (m) {
    case Method::Complex: return "complex";
    case Method::ClosedForm: return "closed_form";
    case Method::BarOracle: return "bar_oracle";
    }
    return "?";
}

std::vector<int> DimensionReport::hh_series() const {
    std::vector<int> out;
    out.reserve(series.size());
    for (const DegreeEntry& e : series) out.push_back(e.hh);
    return out;
}

int DimensionReport::hh(int n) const {
    for (const DegreeEntry& e : series)
        if (e.n == n) return e.hh;
    throw IndexError("degree " + std::to_string(n) + " not present in report");
}

namespace {

ordered_json field_to_json(const FieldDescriptor& f) {
    ordered_json out;
    out["characteristic"] = f.characteristic;
    if (f.q_mode == QMode::Transcendental) {
        out["q"] = "transcendental";
    } else if (denominator(f.q_value) == 1) {
        out["q"] = static_cast<long long>(numerator(f.q_value));
    } else {
        out["q"] = f.q_value.str();
    }
    return out;
}

FieldDescriptor field_from_json(const ordered_json& j) {
    FieldDescriptor out;
    out.characteristic = j.at("characteristic").get<unsigned long>();
    const auto& q = j.at("q");
    if (q.is_string() && q.get<std::string>() == "transcendental") {
        out.q_mode = QMode::Transcendental;
    } else {
        out.q_mode = QMode::Numeric;
        if (q.is_number_integer()) {
            out.q_value = Rational(q.get<long long>());
        } else {
            std::string s = q.get<std::string>();
            auto slash = s.find('/');
            out.q_value = slash == std::string::npos
                              ? Rational(BigInt(s))
                              : Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
        }
    }
    return out;
}

ordered_json series_entry_to_json(const DegreeEntry& e) {
    ordered_json out;
    out["n"] = e.n;
    out["dim_ker"] = e.dim_ker;
    out["dim_im"] = e.dim_im;
    out["hh"] = e.hh;
    out["hh_homology"] = e.hh_homology;
    return out;
}

} // namespace

std::string to_json(const ReportBundle& bundle) {
    ordered_json out;
    out["field"] = field_to_json(bundle.complex.field);
    out["automorphism"] = {{"alpha", bundle.complex.alpha}, {"beta", bundle.complex.beta}};
    out["case"] = bundle.complex.case_label;
    ordered_json series = ordered_json::array();
    for (const DegreeEntry& e : bundle.complex.series) series.push_back(series_entry_to_json(e));
    out["series"] = series;
    ordered_json methods;
    methods["complex"] = bundle.complex.hh_series();
    if (bundle.closed_form)
        methods["closed_form"] = bundle.closed_form->hh_series();
    else
        methods["closed_form"] = nullptr;
    if (bundle.oracle)
        methods["oracle"] = bundle.oracle->hh_series();
    else
        methods["oracle"] = nullptr;
    out["methods"] = methods;
    out["checks"] = {{"dd_zero", bundle.checks.dd_zero},
                     {"rank_bound", bundle.checks.rank_bound},
                     {"duality", bundle.checks.duality}};
    return out.dump(2) + "\n";
}

ReportBundle bundle_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    ReportBundle out;
    out.complex.field = field_from_json(j.at("field"));
    out.complex.alpha = j.at("automorphism").at("alpha").get<std::string>();
    out.complex.beta = j.at("automorphism").at("beta").get<std::string>();
    out.complex.case_label = j.at("case").get<std::string>();
    out.complex.method = Method::Complex;
    for (const auto& e : j.at("series")) {
        DegreeEntry entry;
        entry.n = e.at("n").get<int>();
        entry.dim_ker = e.at("dim_ker").get<int>();
        entry.dim_im = e.at("dim_im").get<int>();
        entry.hh = e.at("hh").get<int>();
        entry.hh_homology = e.at("hh_homology").get<int>();
        out.complex.series.push_back(entry);
    }
    auto read_method = [&](const char* key, Method m) -> std::optional<DimensionReport> {
        const auto& node = j.at("methods").at(key);
        if (node.is_null()) return std::nullopt;
        DimensionReport r;
        r.field = out.complex.field;
        r.alpha = out.complex.alpha;
        r.beta = out.complex.beta;
        r.case_label = out.complex.case_label;
        r.method = m;
        int n = 0;
        for (const auto& v : node) {
            DegreeEntry e;
            e.n = n++;
            e.hh = v.get<int>();
            r.series.push_back(e);
        }
        return r;
    };
    out.closed_form = read_method("closed_form", Method::ClosedForm);
    out.oracle = read_method("oracle", Method::BarOracle);
    out.checks.dd_zero = j.at("checks").at("dd_zero").get<bool>();
    out.checks.rank_bound = j.at("checks").at("rank_bound").get<bool>();
    out.checks.duality = j.at("checks").at("duality").get<bool>();
    return out;
}

std::string to_csv(const ReportBundle& bundle) {
    std::ostringstream out;
    out << "n,dim_ker,dim_im,hh,hh_homology,hh_closed_form,hh_oracle\n";
    for (const DegreeEntry& e : bundle.complex.series) {
        out << e.n << ',' << e.dim_ker << ',' << e.dim_im << ',' << e.hh << ',' << e.hh_homology
            << ',';
        if (bundle.closed_form && e.n < static_cast<int>(bundle.closed_form->series.size()))
            out << bundle.closed_form->series[static_cast<std::size_t>(e.n)].hh;
        out << ',';
        if (bundle.oracle && e.n < static_cast<int>(bundle.oracle->series.size()))
            out << bundle.oracle->series[static_cast<std::size_t>(e.n)].hh;
        out << '\n';
    }
    return out.str();
}

std::string to_text(const ReportBundle& bundle) {
    std::ostringstream out;
    const DimensionReport& r = bundle.complex;
    out << "field: char " << r.field.characteristic << ", q ";
    if (r.field.q_mode == QMode::Transcendental)
        out << "transcendental";
    else
        out << "= " << r.field.q_value.str();
    out << "\nautomorphism: x -> (" << r.alpha << ") x, y -> (" << r.beta << ") y\n";
    if (!r.case_label.empty()) out << "case: " << r.case_label << "\n";
    out << "  n  dim_ker  dim_im  hh";
    if (bundle.closed_form) out << "  closed_form";
    if (bundle.oracle) out << "  oracle";
    out << "  hh_homology\n";
    for (const DegreeEntry& e : r.series) {
        out << std::setw(3) << e.n << std::setw(9) << e.dim_ker << std::setw(8) << e.dim_im
            << std::setw(4) << e.hh;
        if (bundle.closed_form)
            out << std::setw(13) << bundle.closed_form->series[static_cast<std::size_t>(e.n)].hh;
        if (bundle.oracle) {
            if (e.n < static_cast<int>(bundle.oracle->series.size()))
                out << std::setw(8) << bundle.oracle->series[static_cast<std::size_t>(e.n)].hh;
            else
                out << std::setw(8) << "-";
        }
        out << std::setw(13) << e.hh_homology << "\n";
    }
    out << "checks: dd_zero=" << (bundle.checks.dd_zero ? "ok" : "FAIL")
        << " rank_bound=" << (bundle.checks.rank_bound ? "ok" : "FAIL")
        << " duality=" << (bundle.checks.duality ? "ok" : "FAIL") << "\n";
    return out.str();
}

} // namespace qexthh
