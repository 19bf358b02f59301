#include "sdecomp/report.hpp"

#include <sstream>

namespace sdecomp {

std::string tool_version() { return SDECOMP_VERSION; }

Json field_json(const FieldCtx& f) {
    return Json{{"p", f.p()}, {"n", f.n()}, {"q", f.q()}, {"modulus", f.modulus()}, {"generator", f.generator().index}};
}

Json subset_json(const FqSubset& s) { return s.indices(); }

Json elems_json(const std::vector<Elem>& v) {
    Json out = Json::array();
    for (auto x : v) out.push_back(x.index);
    return out;
}

Json pair_class_json(const PairClass& pc) {
    Json verdicts = Json::array();
    for (const auto& v : pc.verdicts) {
        Json concl = Json::array();
        for (auto c : v.conclusions) concl.push_back(to_string(c));
        verdicts.push_back(Json{{"theorem", v.theorem},
                                {"applies", v.applies},
                                {"tier", to_string(v.tier)},
                                {"conclusions", concl},
                                {"citation", v.citation},
                                {"detail", v.detail},
                                {"provenance", kTheorem}});
    }
    Json delta = Json::array();
    for (std::size_t k = 0; k < pc.delta_good.size(); ++k)
        if (pc.delta_good[k]) delta.push_back(k + 1);
    return Json{{"d", pc.d},
                {"q", pc.q},
                {"p", pc.p},
                {"n", pc.n},
                {"sd_size", (pc.q - 1) / pc.d},
                {"digits", pc.expansion.digits},
                {"is_good", pc.is_good},
                {"bullet", pc.first_bullet},
                {"bullets", pc.bullets},
                {"bullet3_floor_reading", pc.bullet3_floor_reading},
                {"delta_good_sup", pc.delta_good_sup ? Json(*pc.delta_good_sup) : Json(nullptr)},
                {"delta_good_grid_k", delta},
                {"order_p_mod_d", pc.order_p_mod_d},
                {"verdicts", verdicts},
                {"provenance", kComputed}};
}

Json certificate_json(const StepanovCertificate& c) {
    Json roots = Json::array();
    for (const auto& e : c.evidence)
        roots.push_back(Json{{"b", e.b.index},
                             {"in_neg_a", e.in_neg_a},
                             {"vanishing_orders", e.vanishing_orders},
                             {"multiplicity", e.certified_multiplicity}});
    return Json{{"q", c.a.field().q()},
                {"d", c.d},
                {"A", elems_json(c.a_order)},
                {"B", elems_json(c.b_order)},
                {"r", c.r},
                {"coefficients", elems_json(c.coefficients)},
                {"exponent", c.exponent},
                {"binom_residue", c.binom_residue},
                {"binom_ok", c.binom_ok},
                {"deg_f", c.f.degree()},
                {"degree_claim", c.degree_claim},
                {"per_b_multiplicity", roots},
                {"multiplicity_sum", c.multiplicity_sum()},
                {"bound", c.bound},
                {"product", c.product},
                {"bound_asserted", c.bound_asserted},
                {"bound_holds", c.bound_holds},
                {"tight", c.tight},
                {"provenance", c.bound_asserted ? kTheorem : kComputed}};
}

namespace {

Json identities_json(const IdentityReport& r) {
    return Json{{"exponent", r.exponent},
                {"binom_residue", r.binom_residue},
                {"failing_indices", r.failing},
                {"top_sum", r.top_sum.index},
                {"top_is_one", r.top_is_one},
                {"all_hold", r.all_hold()}};
}

}  // namespace

Json structure_json(const StructureReport& r, const DichotomyResult& dich) {
    Json out{{"branch", r.branch},
             {"product", r.product},
             {"sd_size", r.sd_size},
             {"binom_a", r.binom_a},
             {"binom_b", r.binom_b},
             {"identities_hold", r.identities_hold},
             {"dichotomy", dich.outcome == Dichotomy::BoundCertified ? "BOUND_CERTIFIED" : "POLYNOMIAL_FORCED_ZERO"},
             {"deg_f", dich.deg_f}};
    if (r.branch == 2) {
        out["identities_a"] = identities_json(r.identities_a);
        out["identities_b"] = identities_json(r.identities_b);
        Json schur = Json::array();
        for (const auto& [j0, h] : r.schur_values) schur.push_back(Json{{"j0", j0}, {"h", h.index}});
        out["schur_values"] = schur;
    }
    out["provenance"] = kComputed;
    return out;
}

Json verdict_json(const Verdict& v, const SearchTask& task) {
    Json wit = Json::array();
    for (const auto& w : v.witnesses) {
        Json sizes = Json::array();
        for (const auto& part : w.parts) sizes.push_back(part.size());
        wit.push_back(Json{{"parts", w.parts}, {"sizes", sizes}});
    }
    return Json{{"q", task.q},
                {"d", task.d},
                {"arity", task.arity},
                {"min_part_size", task.min_part_size},
                {"status", to_string(v.status)},
                {"exhaustive", v.exhaustive},
                {"truncated", v.truncated},
                {"witness_count", v.witnesses.size()},
                {"witnesses", wit},
                {"nodes", v.nodes},
                {"reason", v.reason},
                {"provenance", v.status == Status::Impossible ? kTheorem : kExhaustive}};
}

Json char_sum_json(const DoubleCharSum& s, std::uint32_t d, const FqSubset& a, const FqSubset& b) {
    return Json{{"d", d},
                {"A", subset_json(a)},
                {"B", subset_json(b)},
                {"sum_re", s.sum.real()},
                {"sum_im", s.sum.imag()},
                {"abs", std::abs(s.sum)},
                {"bound", s.bound},
                {"within_bound", std::abs(s.sum) <= s.bound + 1e-6},
                {"tight_case", s.tight_case},
                {"class_counts", s.class_counts},
                {"zero_count", s.zero_count},
                {"provenance", kComputed}};
}

Json envelope(const FieldCtx* f, const std::string& command, Json args, Json results, std::optional<double> wall) {
    Json out{{"schema", kReportSchema}, {"tool_version", tool_version()}};
    out["field"] = f ? field_json(*f) : Json(nullptr);
    out["command"] = Json{{"name", command}, {"args", std::move(args)}};
    out["results"] = std::move(results);
    if (wall) out["wall_time_s"] = *wall;
    return out;
}

std::string classify_csv_header() { return "q,d,p,n,digits,is_good,bullet,delta_sup,verdicts"; }

std::string classify_csv_row(const PairClass& pc) {
    std::ostringstream os;
    os << pc.q << ',' << pc.d << ',' << pc.p << ',' << pc.n << ',';
    for (std::size_t i = 0; i < pc.expansion.digits.size(); ++i) os << (i ? " " : "") << pc.expansion.digits[i];
    os << ',' << (pc.is_good ? "true" : "false") << ',' << pc.first_bullet << ',';
    if (pc.delta_good_sup) os << *pc.delta_good_sup;
    os << ',';
    bool first = true;
    for (const auto& v : pc.verdicts) {
        if (!v.applies) continue;
        os << (first ? "" : " ") << v.theorem << ':' << to_string(v.tier);
        first = false;
    }
    return os.str();
}

}  // namespace sdecomp
