#include "cubic/json_io.hpp"

#include "cubic/errors.hpp"

namespace cubic {

Json class_json(const DivisorClass& d) {
    Json j = Json::array({d.a});
    for (Int x : d.b) j.push_back(x);
    return j;
}

DivisorClass class_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 7) throw DomainError("a class is an array of 7 integers");
    for (const Json& x : j)
        if (!x.is_number_integer()) throw DomainError("a class is an array of 7 integers");
    DivisorClass d;
    d.a = j[0].get<Int>();
    for (std::size_t i = 0; i < 6; ++i) d.b[i] = j[i + 1].get<Int>();
    return d;
}

Json standard_form_json(const StandardForm& s) {
    Json word = Json::array();
    for (const Reflection& r : s.word) word.push_back(to_string(r));
    return {{"class", class_json(s.standard)}, {"word", word}};
}

Json analysis_json(const DivisorClass& input, const SystemAnalysis& s) {
    Json lines = Json::array();
    for (const FixedLine& fl : s.fixed_lines.view())
        lines.push_back({{"line", class_json(fl.line)}, {"multiplicity", fl.multiplicity}});
    Json j = {
        {"effective", s.effective},
        {"nef", is_nef(input)},
        {"big_and_nef", is_big_and_nef(input)},
        {"euler_characteristic", euler_characteristic(input)},
        {"h0", s.cohomology.h0},
        {"h1", s.cohomology.h1},
        {"h2", s.cohomology.h2},
        {"peel_rounds", s.peel_rounds},
    };
    if (s.effective) {
        j["mobile"] = class_json(s.mobile);
        j["fixed_part"] = class_json(s.fixed_part);
        j["fixed_lines"] = lines;
        j["mobile_kind"] = to_string(s.mobile_kind);
        if (s.mobile_kind == MobileKind::conics) j["conic_count"] = s.conic_count;
    }
    return j;
}

Json core_json(const CoreCheck& c) {
    Json j = {
        {"fixed_part_is_single_line", c.fixed_part_is_single_line},
        {"c_minus_4h_effective", c.c_minus_4h_effective},
        {"c_dot_e_is_2", c.c_dot_e_is_2},
        {"c_minus_3h_minus_e_nef_big", c.c_minus_3h_minus_e_nef_big},
        {"delta_effective", c.delta_effective},
        {"delta_disjoint_from_e", c.delta_disjoint_from_e},
        {"injectivity_inequality", c.injectivity_inequality},
        {"h1_ideal_3_is_1", c.h1_ideal_3_is_1},
        {"all_true", c.all_true()},
    };
    j["line"] = c.line ? class_json(*c.line) : Json(nullptr);
    j["delta"] = c.delta ? class_json(*c.delta) : Json(nullptr);
    return j;
}

Json report_json(const FamilyReport& r) {
    Json j = {
        {"key", class_json(r.key.divisor())},
        {"degree", r.degree},
        {"genus", r.genus},
        {"in_omega", r.in_omega},
        {"dim_w", r.dim_w},
        {"chi_normal", r.chi_normal},
        {"h1_ideal_3", r.h1_ideal_3},
        {"h1_ideal_1", r.h1_ideal_1},
        {"h1_oc3", r.h1_oc3},
        {"h0_normal", r.h0_normal},
        {"verdict", to_string(r.verdict)},
    };
    if (r.verdict == Verdict::open) {
        Json flags = Json::array();
        if (r.literature.kleppe_range_1) flags.push_back("kleppe_range_1");
        if (r.literature.kleppe_range_2) flags.push_back("kleppe_range_2");
        j["literature_flags"] = flags;
        j["kleppe_ellia_hypotheses"] = r.kleppe_ellia_hypotheses;
    }
    j["core"] = r.core ? core_json(*r.core) : Json(nullptr);
    return j;
}

Json quadric_json(const QuadricFamily& f) {
    Json j = {
        {"bidegree", Json::array({f.a, f.b})},
        {"degree", f.degree},
        {"genus", f.genus},
        {"dim_w", f.dim_w},
        {"h1_ideal_2", f.h1_ideal_2},
        {"verdict", to_string(f.verdict)},
        {"generically_non_singular", f.generically_non_singular},
    };
    j["codimension"] = f.codimension ? Json(*f.codimension) : Json(nullptr);
    return j;
}

}  // namespace cubic
