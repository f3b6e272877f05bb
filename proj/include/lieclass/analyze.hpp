#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieclass/commutant.hpp"
#include "lieclass/forms.hpp"
#include "lieclass/irreducibility.hpp"
#include "lieclass/representation.hpp"
#include "lieclass/structure.hpp"
#include "lieclass/zoo.hpp"

namespace lieclass {

inline constexpr const char* kSchemaVersion = "v1";

/// Aggregated verdict record for one representation: the full pipeline
/// output, serialized to JSON (schema v1) or a text rendering of it.
struct AnalysisReport {
    std::string name;
    std::size_t n = 0;
    Level level = Level::lie_algebra;
    std::size_t generator_count = 0;

    IrreducibilityResult irreducibility;
    CommutantAlgebra commutant;
    FormSpace forms;
    std::optional<TableRow> table_row;       // irreducible runs only
    std::optional<ExtendedForm> extension;   // C/H self-dual irreducible runs
    std::optional<StructureReport> structure;  // algebra-level runs only
    std::optional<OrthogonalCenterReport> orthogonal_center;
    std::optional<LorentzReport> lorentz;
    long long timing_ms = 0;
};

/// Full pipeline: closure (algebra level) -> hull -> commutant -> type ->
/// irreducibility -> forms -> table row -> structure -> applicable checks.
/// Internal consistency violations surface as InternalCheckError.
inline AnalysisReport run_analysis(const Representation& rep) {
    const auto t0 = std::chrono::steady_clock::now();
    rep.validate();

    AnalysisReport out;
    out.name = rep.name;
    out.n = rep.n;
    out.level = rep.level;
    out.generator_count = rep.generators.size();

    const MatrixAlgebraSpan hull = associative_hull(rep);
    CommutantAlgebra comm = commutant_basis(rep);
    out.irreducibility = is_irreducible(rep, hull, comm);
    const bool irr = out.irreducibility.irreducible;
    if (irr)
        classify_type(comm, /*rep_irreducible=*/true);  // asserts a division type

    out.forms = invariant_forms(rep);
    if (irr) {
        // Division commutant and the Riesz correspondence as executable assertions.
        if (out.forms.self_dual && out.forms.dim() != comm.dim())
            throw InternalCheckError("form space and commutant dimensions differ on an "
                                     "irreducible self-dual representation");
        for (const auto& f : out.forms.sym_basis)
            if (det(f) == 0)
                throw InternalCheckError("degenerate invariant form on an irreducible representation");
        for (const auto& f : out.forms.skew_basis)
            if (det(f) == 0)
                throw InternalCheckError("degenerate invariant form on an irreducible representation");
        out.table_row = classify_table_row(rep.n, comm, out.forms);
        if (out.forms.self_dual) {
            if (comm.type == CommutantType::C)
                out.extension = complex_extension(out.forms, comm);
            else if (comm.type == CommutantType::H)
                out.extension = quaternionic_extension(out.forms, comm);
        }
    }

    std::vector<Matrix> center;
    if (rep.level == Level::lie_algebra) {
        const MatrixAlgebraSpan g = lie_closure(rep);
        center = center_of(g);
        out.structure = analyze_structure(g, comm, irr);
    }

    if (out.structure)
        out.orthogonal_center = orthogonal_center_check(rep, out.forms, *out.structure, center);

    if (rep.level == Level::lie_algebra && rep.n >= 2) {
        const Matrix form = ipq(1, rep.n - 1);
        bool in_lorentz = true;
        for (const auto& g : rep.generators)
            if (!(g.transpose() * form + form * g).is_zero()) { in_lorentz = false; break; }
        if (in_lorentz) out.lorentz = lorentz_maximality_check(rep);
    }

    out.commutant = std::move(comm);
    out.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    return out;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::json signature_json(const Signature& s) {
    return nlohmann::json::array({s.n_minus, s.n_plus});
}

inline nlohmann::json subspace_json(const std::vector<Vector>& basis) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& v : basis) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : v) row.push_back(rational_to_string(x));
        a.push_back(std::move(row));
    }
    return a;
}

} // namespace detail

inline nlohmann::json forms_fragment_json(const FormSpace& forms,
                                          const std::optional<TableRow>& row) {
    nlohmann::json j;
    j["self_dual"] = forms.self_dual;
    j["dim_sym"] = forms.dim_sym();
    j["dim_skew"] = forms.dim_skew();
    nlohmann::json sigs = nlohmann::json::array();
    for (const auto& s : forms.sym_signatures) sigs.push_back(detail::signature_json(s));
    j["signatures"] = std::move(sigs);
    j["signature_convention"] = "(n_minus,n_plus); distinguished form sign-normalized so p <= q";
    if (row) {
        nlohmann::json r;
        r["type"] = commutant_type_to_string(row->type);
        r["stabilizer"] = row->stabilizer;
        r["family"] = stabilizer_family_to_string(row->family);
        if (row->signature)
            r["signature"] = nlohmann::json::array({row->signature->first, row->signature->second});
        else
            r["signature"] = nullptr;
        if (row->guard_note) r["guard_note"] = *row->guard_note;
        j["table_row"] = std::move(r);
    } else {
        j["table_row"] = nullptr;
    }
    return j;
}

inline nlohmann::json report_to_json(const AnalysisReport& rep) {
    nlohmann::json j;
    j["schema"] = kSchemaVersion;
    j["input"] = {{"name", rep.name},
                  {"dimension", rep.n},
                  {"level", level_to_string(rep.level)},
                  {"generator_count", rep.generator_count}};

    j["irreducible"] = rep.irreducibility.irreducible;
    nlohmann::json cert;
    if (rep.irreducibility.irreducible) {
        cert["kind"] = "double_centralizer";
        cert["hull_dim"] = rep.irreducibility.hull_dim;
        cert["commutant_dim"] = rep.irreducibility.commutant_dim;
    } else if (rep.irreducibility.witness) {
        cert["kind"] = "invariant_subspace";
        cert["subspace_dim"] = rep.irreducibility.witness->size();
        cert["subspace"] = detail::subspace_json(*rep.irreducibility.witness);
    } else {
        cert["kind"] = "no_rational_witness";
        cert["note"] = rep.irreducibility.note;
    }
    j["certificate"] = std::move(cert);

    nlohmann::json comm;
    comm["dim"] = rep.commutant.dim();
    comm["type"] = commutant_type_to_string(rep.commutant.type);
    if (rep.commutant.complex_structure)
        comm["lambda"] = rational_to_string(rep.commutant.complex_structure->lambda);
    j["commutant"] = std::move(comm);

    j["forms"] = forms_fragment_json(rep.forms, rep.table_row);

    if (rep.extension) {
        nlohmann::json e;
        e["flavor"] = extension_flavor_to_string(rep.extension->flavor);
        if (rep.extension->complex_signature)
            e["complex_signature"] = detail::signature_json(*rep.extension->complex_signature);
        j["extension"] = std::move(e);
    } else {
        j["extension"] = nullptr;
    }

    if (rep.structure) {
        const StructureReport& s = *rep.structure;
        nlohmann::json sj;
        sj["dim_g"] = s.dim_g;
        sj["dim_center"] = s.dim_center;
        sj["dim_derived"] = s.dim_derived;
        sj["killing_rank"] = s.killing_rank;
        sj["semisimple"] = s.semisimple;
        sj["reductive_split_ok"] = s.reductive_split_ok;
        sj["center_shape"] = center_shape_to_string(s.center_shape.shape);
        sj["center_shape_outside_hypothesis"] = s.center_shape.outside_hypothesis;
        sj["closedness"] = closedness_to_string(s.closedness);
        j["structure"] = std::move(sj);
    } else {
        j["structure"] = nullptr;
    }

    nlohmann::json checks;
    if (rep.orthogonal_center && rep.orthogonal_center->applicable) {
        const auto& oc = *rep.orthogonal_center;
        checks["orthogonal_center"] = {{"p", oc.p},
                                       {"q", oc.q},
                                       {"parities_even", oc.parities_even},
                                       {"center_structure_commutes", oc.center_structure_commutes},
                                       {"generators_skew_for_form", oc.generators_skew_for_form},
                                       {"passed", oc.passed}};
    } else {
        checks["orthogonal_center"] =
            rep.orthogonal_center ? rep.orthogonal_center->reason : "not_applicable";
    }
    if (rep.lorentz) {
        nlohmann::json lj;
        lj["outcome"] = lorentz_outcome_to_string(rep.lorentz->outcome);
        lj["closure_dim"] = rep.lorentz->closure_dim;
        lj["full_dim"] = rep.lorentz->full_dim;
        checks["lorentz"] = std::move(lj);
    } else {
        checks["lorentz"] = "not_applicable";
    }
    j["checks"] = std::move(checks);
    j["timing_ms"] = rep.timing_ms;
    return j;
}

inline std::string report_to_text(const AnalysisReport& rep) {
    std::ostringstream os;
    os << "representation " << rep.name << " on R^" << rep.n << " ("
       << level_to_string(rep.level) << ", " << rep.generator_count << " generators)\n";
    os << "  irreducible: " << (rep.irreducibility.irreducible ? "yes" : "no");
    if (rep.irreducibility.irreducible)
        os << "  [hull " << rep.irreducibility.hull_dim << " x commutant "
           << rep.irreducibility.commutant_dim << " = n^2]";
    else if (rep.irreducibility.witness)
        os << "  [invariant subspace of dim " << rep.irreducibility.witness->size() << "]";
    os << "\n";
    os << "  commutant: dim " << rep.commutant.dim() << ", type "
       << commutant_type_to_string(rep.commutant.type) << "\n";
    os << "  forms: self_dual " << (rep.forms.self_dual ? "yes" : "no") << ", dim sym "
       << rep.forms.dim_sym() << ", dim skew " << rep.forms.dim_skew() << "\n";
    for (std::size_t i = 0; i < rep.forms.sym_signatures.size(); ++i)
        os << "    symmetric form " << i << " signature (" << rep.forms.sym_signatures[i].n_minus
           << "," << rep.forms.sym_signatures[i].n_plus << ")\n";
    if (rep.table_row) {
        os << "  table row: " << commutant_type_to_string(rep.table_row->type) << " | "
           << rep.table_row->dim_sym << " | " << rep.table_row->dim_skew << " | "
           << rep.table_row->stabilizer;
        if (rep.table_row->signature)
            os << "  signature (" << rep.table_row->signature->first << ","
               << rep.table_row->signature->second << ")";
        if (rep.table_row->guard_note) os << "  [" << *rep.table_row->guard_note << "]";
        os << "\n";
    }
    if (rep.extension)
        os << "  extension: " << extension_flavor_to_string(rep.extension->flavor) << "\n";
    if (rep.structure) {
        const auto& s = *rep.structure;
        os << "  structure: dim " << s.dim_g << ", center " << s.dim_center << ", derived "
           << s.dim_derived << ", killing rank " << s.killing_rank << ", semisimple "
           << (s.semisimple ? "yes" : "no") << "\n";
        os << "  center shape: " << center_shape_to_string(s.center_shape.shape)
           << (s.center_shape.outside_hypothesis ? " (outside irreducibility hypothesis)" : "")
           << "\n";
        os << "  closedness: " << closedness_to_string(s.closedness) << "\n";
    }
    if (rep.orthogonal_center && rep.orthogonal_center->applicable)
        os << "  orthogonal center check: " << (rep.orthogonal_center->passed ? "pass" : "fail")
           << " (p,q) = (" << rep.orthogonal_center->p << "," << rep.orthogonal_center->q << ")\n";
    if (rep.lorentz)
        os << "  lorentz: " << lorentz_outcome_to_string(rep.lorentz->outcome) << " (closure dim "
           << rep.lorentz->closure_dim << " of " << rep.lorentz->full_dim << ")\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Table reproduction
// ---------------------------------------------------------------------------

struct TableCheckResult {
    bool all_ok = true;
    std::string text;
};

/// Runs every catalog entry through the pipeline and compares against the
/// expected record; prints computed rows alongside expectations and a
/// summary of the seven table rows with their entry counts.
inline TableCheckResult check_table(const std::vector<ZooEntry>& entries) {
    TableCheckResult res;
    std::ostringstream os;
    std::map<StabilizerFamily, std::size_t> row_counts;
    os << "End_G | dim S | dim L | stabilizer            | entry\n";
    os << "------+-------+-------+------------------------+---------------\n";
    for (const auto& entry : entries) {
        const AnalysisReport rep = run_analysis(entry.rep);
        bool ok = true;
        std::string detail;
        if (entry.expected) {
            const ZooExpected& e = *entry.expected;
            auto mismatch = [&](const std::string& what) {
                ok = false;
                if (!detail.empty()) detail += "; ";
                detail += what;
            };
            if (rep.irreducibility.irreducible != e.irreducible) mismatch("irreducibility");
            if (e.type && rep.commutant.type != *e.type) mismatch("commutant type");
            if (e.commutant_dim && rep.commutant.dim() != *e.commutant_dim) mismatch("commutant dim");
            if (e.self_dual && rep.forms.self_dual != *e.self_dual) mismatch("self-duality");
            if (e.dim_sym && rep.forms.dim_sym() != *e.dim_sym) mismatch("dim sym");
            if (e.dim_skew && rep.forms.dim_skew() != *e.dim_skew) mismatch("dim skew");
            if (e.family && (!rep.table_row || rep.table_row->family != *e.family))
                mismatch("stabilizer family");
            if (e.stabilizer && (!rep.table_row || rep.table_row->stabilizer != *e.stabilizer))
                mismatch("stabilizer");
            if (e.signature) {
                if (!rep.table_row || !rep.table_row->signature ||
                    *rep.table_row->signature != *e.signature)
                    mismatch("signature");
            }
            if (e.center_shape &&
                (!rep.structure || rep.structure->center_shape.shape != *e.center_shape))
                mismatch("center shape");
            if (e.center_dim && (!rep.structure || rep.structure->dim_center != *e.center_dim))
                mismatch("center dim");
            if (e.semisimple && (!rep.structure || rep.structure->semisimple != *e.semisimple))
                mismatch("semisimplicity");
        }
        const std::string type = commutant_type_to_string(rep.commutant.type);
        const std::string stab = rep.table_row ? rep.table_row->stabilizer : "-";
        if (rep.table_row && rep.table_row->family != StabilizerFamily::NotSelfDual)
            ++row_counts[rep.table_row->family];
        os << (type + "     ").substr(0, 5) << " |   " << rep.forms.dim_sym() << "   |   "
           << rep.forms.dim_skew() << "   | " << stab;
        for (std::size_t pad = stab.size(); pad < 22; ++pad) os << ' ';
        os << " | " << entry.display << (ok ? "" : "  MISMATCH: " + detail) << "\n";
        res.all_ok = res.all_ok && ok;
    }
    os << "\ntable rows covered (" << row_counts.size() << " of 7):\n";
    for (const StabilizerFamily f :
         {StabilizerFamily::O_pq, StabilizerFamily::Sp_R, StabilizerFamily::O_C,
          StabilizerFamily::Sp_C, StabilizerFamily::U_pq, StabilizerFamily::Sp_pq,
          StabilizerFamily::O_star}) {
        os << "  " << stabilizer_family_to_string(f) << ": " << row_counts[f] << " entr"
           << (row_counts[f] == 1 ? "y" : "ies") << "\n";
        if (row_counts[f] == 0) res.all_ok = false;
    }
    res.text = os.str();
    return res;
}

// ---------------------------------------------------------------------------
// Lorentz scan
// ---------------------------------------------------------------------------

struct LorentzScanTrial {
    std::size_t generator_count = 0;
    std::size_t closure_dim = 0;
    LorentzOutcome outcome;
};

struct LorentzScanReport {
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<LorentzScanTrial> results;
    std::size_t full_count = 0;
    std::size_t reducible_count = 0;
    std::size_t no_witness_count = 0;
    std::size_t violations = 0;  // stays zero unless the maximality check throws
};

/// Random Lie-closed subalgebras of so(1,n): random rational coefficient
/// vectors over the standard basis, random subset size, then closure. The
/// RNG stream is fully determined by the seed.
inline LorentzScanReport lorentz_scan(std::size_t n, std::size_t trials, std::uint64_t seed) {
    if (n < 2 || n > 6)
        throw ValidationError("lorentz_scan: n must be in [2, 6]");
    if (trials < 1)
        throw ValidationError("lorentz_scan: trials must be >= 1");

    LorentzScanReport report;
    report.n = n;
    report.trials = trials;
    report.seed = seed;

    const Representation so1n = zoo::make("so", {1, static_cast<long>(n)});
    const std::size_t d = so1n.generators.size();
    std::mt19937_64 rng(seed);
    auto small_int = [&](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t count = 1 + static_cast<std::size_t>(rng() % 3);
        Representation rep;
        rep.name = "so(1," + std::to_string(n) + ") random subalgebra";
        rep.n = n + 1;
        rep.level = Level::lie_algebra;
        for (std::size_t k = 0; k < count; ++k) {
            Matrix g(rep.n, rep.n);
            bool nonzero = false;
            for (std::size_t i = 0; i < d; ++i) {
                const long num = small_int(-4, 4);
                if (num == 0) continue;
                const long den = small_int(1, 2);
                g = g + Rational(num, den) * so1n.generators[i];
                nonzero = true;
            }
            if (!nonzero) g = so1n.generators[0];
            rep.generators.push_back(std::move(g));
        }

        const LorentzReport lr = lorentz_maximality_check(rep);
        LorentzScanTrial trial;
        trial.generator_count = count;
        trial.closure_dim = lr.closure_dim;
        trial.outcome = lr.outcome;
        report.results.push_back(trial);
        switch (lr.outcome) {
        case LorentzOutcome::irreducible_and_full: ++report.full_count; break;
        case LorentzOutcome::reducible_with_witness: ++report.reducible_count; break;
        case LorentzOutcome::reducible_no_rational_witness: ++report.no_witness_count; break;
        }
    }
    return report;
}

inline nlohmann::json lorentz_scan_to_json(const LorentzScanReport& r) {
    nlohmann::json j;
    j["schema"] = kSchemaVersion;
    j["n"] = r.n;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["irreducible_and_full"] = r.full_count;
    j["reducible_with_witness"] = r.reducible_count;
    j["reducible_no_rational_witness"] = r.no_witness_count;
    j["violations"] = r.violations;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : r.results)
        arr.push_back({{"generators", t.generator_count},
                       {"closure_dim", t.closure_dim},
                       {"outcome", lorentz_outcome_to_string(t.outcome)}});
    j["trials_detail"] = std::move(arr);
    return j;
}

} // namespace lieclass
