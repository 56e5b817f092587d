#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qexthh/field.hpp"

namespace qexthh {

enum class Method { Complex, ClosedForm, BarOracle };

std::string method_name(Method m);

/// One degree of a dimension report. dim_ker is dim Ker d_{n+1} and dim_im
/// is dim Im d_n in the 4n-dimensional cochain layout, so hh = dim_ker -
/// dim_im; both are -1 for methods that predict hh without building
/// matrices. hh_homology is the dimension of the homology group computed
/// alongside via the duality transfer (coefficients twisted by (nu psi)^{-1}).
struct DegreeEntry {
    int n = 0;
    int dim_ker = -1;
    int dim_im = -1;
    int hh = 0;
    int hh_homology = -1;

    bool operator==(const DegreeEntry&) const = default;
};

/// Per-degree dimensions for one twisted bimodule and one method.
struct DimensionReport {
    FieldDescriptor field;
    std::string alpha, beta;
    std::string case_label; // closed-form case label, when classified
    Method method = Method::Complex;
    std::vector<DegreeEntry> series;

    std::vector<int> hh_series() const;
    int hh(int n) const;
};

struct VerificationChecks {
    bool dd_zero = false;
    bool rank_bound = false;
    bool duality = false;

    bool operator==(const VerificationChecks&) const = default;
};

/// What the CLI emits: the matrix-method report plus optional closed-form
/// and oracle series and the structural checks that were run.
struct ReportBundle {
    DimensionReport complex;
    std::optional<DimensionReport> closed_form;
    std::optional<DimensionReport> oracle;
    VerificationChecks checks;
};

/// Stable JSON schema:
/// {"field":{"characteristic":int,"q":"transcendental"|number},
///  "automorphism":{"alpha":string,"beta":string},
///  "case":string,
///  "series":[{"n":int,"dim_ker":int,"dim_im":int,"hh":int,"hh_homology":int}],
///  "methods":{"complex":[int],"closed_form":[int]|null,"oracle":[int]|null},
///  "checks":{"dd_zero":bool,"rank_bound":bool,"duality":bool}}
std::string to_json(const ReportBundle& bundle);
ReportBundle bundle_from_json(const std::string& text);

/// CSV with the fixed header
/// n,dim_ker,dim_im,hh,hh_homology,hh_closed_form,hh_oracle
/// and one row per degree (blank cells for methods that were not run).
std::string to_csv(const ReportBundle& bundle);

/// Human-readable table.
std::string to_text(const ReportBundle& bundle);

} // namespace qexthh
