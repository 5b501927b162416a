#include "cubic/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cubic/checked.hpp"
#include "cubic/errors.hpp"
#include "cubic/selftest.hpp"

namespace cubic::cli {

Int max_coordinate() {
    const char* env = std::getenv("CUBIC_HILBERT_MAX_COORD");
    if (!env || !*env) return kDefaultMaxCoord;
    Int v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [p, ec] = std::from_chars(env, end, v);
    if (ec != std::errc() || p != end || v <= 0)
        throw DomainError("CUBIC_HILBERT_MAX_COORD must be a positive integer");
    return v;
}

namespace {

Int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    Int v = 0;
    const char* first = s.data();
    if (!s.empty() && s.front() == '+') ++first;
    auto [p, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size())
        throw DomainError("not an integer: '" + std::string(s) + "'");
    return v;
}

std::vector<Int> parse_list(const std::string& text) {
    std::vector<Int> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_int(std::string_view(text).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Int bounded(Int v, const char* what) {
    const Int limit = max_coordinate();
    if (checked::abs(v) > limit)
        throw DomainError(std::string(what) + " " + std::to_string(v) + " exceeds the bound " +
                          std::to_string(limit) + " (set CUBIC_HILBERT_MAX_COORD to change it)");
    return v;
}

DivisorClass input_class(const Json& input) {
    if (!input.contains("class")) throw DomainError("missing class");
    const DivisorClass d = class_from_json(input.at("class"));
    bounded(d.a, "coordinate");
    for (Int x : d.b) bounded(x, "coordinate");
    return d;
}

Int input_int(const Json& input, const char* key) {
    if (!input.contains(key) || !input.at(key).is_number_integer())
        throw DomainError(std::string("missing integer field '") + key + "'");
    return bounded(input.at(key).get<Int>(), key);
}

Json keys_json(const std::vector<FamilyKey>& keys) {
    Json j = Json::array();
    for (const FamilyKey& k : keys) j.push_back(class_json(k.divisor()));
    return j;
}

Outcome cmd_reduce(const Json& input) {
    return {.result = standard_form_json(standardize(input_class(input)))};
}

Outcome cmd_classify(const Json& input) {
    Outcome o;
    if (input.contains("class")) {
        const FamilyReport r = classify(FamilyKey(input_class(input)));
        o.result = report_json(r);
        if (r.verdict == Verdict::below_omega)
            o.warnings.push_back("(d, g) lies below Omega: dim W = d + g + 18 < 4d");
        if (r.verdict == Verdict::open) o.warnings.push_back("verdict is open for this multidegree");
        if (r.core && r.core->hypotheses_hold() && !r.core->all_true()) {
            o.exit_code = ExitCode::inconsistency;
            o.warnings.push_back("core hypotheses hold but a consequence failed");
        }
        return o;
    }
    const Int d = input_int(input, "degree"), g = input_int(input, "genus");
    Json reports = Json::array();
    for (const FamilyKey& k : enumerate(d, g)) reports.push_back(report_json(classify(k)));
    if (reports.empty()) o.warnings.push_back("no admissible multidegree has this degree and genus");
    o.result = {{"reports", reports}};
    return o;
}

Outcome cmd_cohomology(const Json& input) {
    Outcome o;
    const DivisorClass d = input_class(input);
    const SystemAnalysis s = decompose(d);
    o.result = analysis_json(d, s);
    if (s.effective && !d.is_zero()) {
        const Int direct = h1_of_minus(d);
        const Int general = cohomology(-d).h1;
        o.result["h1_of_minus"] = direct;
        o.result["h1_of_minus_routes_agree"] = direct == general;
        if (direct != general) {
            o.exit_code = ExitCode::inconsistency;
            o.warnings.push_back("h1(S, -D): fixed-part route gives " + std::to_string(direct) +
                                 ", Riemann-Roch route gives " + std::to_string(general));
        }
    }
    return o;
}

Outcome cmd_h1_ideal(const Json& input) {
    Outcome o;
    const FamilyKey key(input_class(input));
    const Int n = input_int(input, "n");
    const Int value = h1_ideal(key, n);
    o.result = {{"h1_ideal", value}, {"n", n}};

    const DivisorClass twisted = key.divisor() - n * lattice::hyperplane();
    const bool exceptional = fixed_part_is_exceptional(key, n);
    o.result["fixed_part_exceptional"] = exceptional;
    const bool corollary = decompose(twisted).effective && self_intersection(twisted) > 0;
    o.result["fixed_part_formula"] = corollary ? Json(h1_ideal_fixed_part_formula(key, n)) : Json(nullptr);
    if (exceptional && corollary && h1_ideal_fixed_part_formula(key, n) != value)
        o.exit_code = ExitCode::inconsistency;

    const Int d = degree(key.divisor()), g = genus(key.divisor());
    const bool closed = n == 3 && in_omega(d, g);
    o.result["closed_form"] = closed ? Json(h1_ideal_3_closed_form(key)) : Json(nullptr);
    if (exceptional && closed && h1_ideal_3_closed_form(key) != value) o.exit_code = ExitCode::inconsistency;
    if (o.exit_code != ExitCode::ok) o.warnings.push_back("closed forms disagree with the general route");
    if (decompose(twisted).effective && !exceptional)
        o.warnings.push_back("fixed part of |C - nh| contains a non-exceptional line; closed forms do not apply");
    return o;
}

Outcome cmd_verify_core(const Json& input) {
    Outcome o;
    const CoreCheck c = verify_core(FamilyKey(input_class(input)));
    o.result = core_json(c);
    if (!c.hypotheses_hold()) o.warnings.push_back("core hypotheses (i)/(ii) do not hold for this class");
    if (c.hypotheses_hold() && !c.all_true()) {
        o.exit_code = ExitCode::inconsistency;
        o.warnings.push_back("core hypotheses hold but a consequence failed");
    }
    return o;
}

Outcome cmd_quadric(const Json& input) {
    if (!input.contains("bidegree") || !input.at("bidegree").is_array() || input.at("bidegree").size() != 2)
        throw DomainError("bidegree is a pair a,b");
    const Json& bd = input.at("bidegree");
    if (!bd[0].is_number_integer() || !bd[1].is_number_integer()) throw DomainError("bidegree is a pair a,b");
    return {.result = quadric_json(classify_quadric(bounded(bd[0].get<Int>(), "a"), bounded(bd[1].get<Int>(), "b")))};
}

Outcome cmd_enumerate(const Json& input) {
    Outcome o;
    if (input.contains("genus")) {
        const Int d = input_int(input, "degree"), g = input_int(input, "genus");
        const auto keys = enumerate(d, g);
        o.result = {{"count", keys.size()}, {"keys", keys_json(keys)}};
        if (input.value("paranoid", false)) {
            if (d > 16) throw DomainError("--paranoid brute force is limited to d <= 16");
            const bool same = enumerate_naive(d, g) == keys;
            o.result["brute_force_agrees"] = same;
            if (!same) o.exit_code = ExitCode::inconsistency;
        }
        return o;
    }
    const Int lo = input_int(input, "degree_min"), hi = input_int(input, "degree_max");
    const bool omega_only = input.value("omega_only", false);
    Json families = Json::array();
    for (Int d = lo; d <= hi; ++d)
        for (const FamilyKey& k : enumerate_degree(d)) {
            const Int g = genus(k.divisor());
            if (omega_only && !in_omega(d, g)) continue;
            families.push_back({{"degree", d}, {"genus", g}, {"key", class_json(k.divisor())}});
        }
    o.result = {{"count", families.size()}, {"families", families}};
    return o;
}

Outcome cmd_sweep(const Json& input) {
    const Int lo = input_int(input, "degree_min"), hi = input_int(input, "degree_max");
    const std::string mode = input.value("mode", "omega_only");
    if (mode != "omega_only" && mode != "all") throw DomainError("mode is omega_only or all");
    Outcome o;
    Json reports = Json::array();
    for (const FamilyReport& r : sweep(lo, hi, mode == "all" ? SweepMode::all : SweepMode::omega_only))
        reports.push_back(report_json(r));
    o.result = {{"count", reports.size()}, {"reports", reports}};
    return o;
}

Outcome cmd_selftest(const Json& input) {
    SelftestOptions opt;
    opt.box = static_cast<int>(input.value("box", Int{opt.box}));
    opt.random_trials = static_cast<int>(input.value("trials", Int{opt.random_trials}));
    opt.max_degree = static_cast<int>(input.value("max_degree", Int{opt.max_degree}));
    opt.seed = static_cast<std::uint64_t>(input.value("seed", static_cast<Int>(opt.seed)));
    if (opt.box < 0 || opt.box > 8) throw DomainError("--box must be in 0..8");
    Outcome o;
    Json checks = Json::array();
    bool all = true;
    for (const SelftestCheck& c : run_selftest(opt)) {
        all = all && c.passed;
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    o.result = {{"checks", checks}, {"passed", all}};
    if (!all) o.exit_code = ExitCode::inconsistency;
    return o;
}

// ---- table output ----

std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array() && v.size() == 7) {
        std::string s = "(" + std::to_string(v[0].get<Int>()) + ";";
        for (std::size_t i = 1; i < 7; ++i) s += (i > 1 ? "," : "") + std::to_string(v[i].get<Int>());
        return s + ")";
    }
    if (v.is_null()) return "-";
    return v.dump();
}

void print_reports(const Json& reports, std::ostream& out) {
    out << std::left << std::setw(26) << "key" << std::right << std::setw(5) << "d" << std::setw(6) << "g"
        << std::setw(7) << "dimW" << std::setw(7) << "h0N" << std::setw(6) << "h1I3" << std::setw(6) << "h1I1"
        << "  verdict\n";
    for (const Json& r : reports) {
        out << std::left << std::setw(26) << cell(r["key"]) << std::right << std::setw(5) << r["degree"].dump()
            << std::setw(6) << r["genus"].dump() << std::setw(7) << r["dim_w"].dump() << std::setw(7)
            << r["h0_normal"].dump() << std::setw(6) << r["h1_ideal_3"].dump() << std::setw(6)
            << r["h1_ideal_1"].dump() << "  " << r["verdict"].get<std::string>() << '\n';
    }
}

void print_object(const Json& j, std::ostream& out, const std::string& indent = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        if (v.is_object()) {
            out << indent << it.key() << ":\n";
            print_object(v, out, indent + "  ");
        } else if (v.is_array() && !v.empty() && (v[0].is_object() || (v[0].is_array() && v.size() > 0))) {
            out << indent << it.key() << ":\n";
            for (const Json& e : v) {
                if (e.is_object()) {
                    out << indent << "  -\n";
                    print_object(e, out, indent + "    ");
                } else {
                    out << indent << "  - " << cell(e) << '\n';
                }
            }
        } else {
            out << indent << it.key() << ": " << cell(v) << '\n';
        }
    }
}

void print_table(const std::string& command, const Json& result, std::ostream& out) {
    if (result.contains("reports")) {
        print_reports(result["reports"], out);
        out << result["reports"].size() << " families\n";
        return;
    }
    if (command == "selftest") {
        for (const Json& c : result["checks"])
            out << (c["passed"].get<bool>() ? "PASS  " : "FAIL  ") << c["name"].get<std::string>() << "  ("
                << c["detail"].get<std::string>() << ")\n";
        out << (result["passed"].get<bool>() ? "selftest passed\n" : "selftest FAILED\n");
        return;
    }
    print_object(result, out);
}

struct Request {
    std::string command;
    Json input = Json::object();
};

}  // namespace

DivisorClass parse_class(const std::string& text) {
    const std::vector<Int> v = parse_list(text);
    if (v.size() != 7) throw DomainError("a class is 7 comma-separated integers a,b1,...,b6; got '" + text + "'");
    DivisorClass d;
    d.a = bounded(v[0], "coordinate");
    for (std::size_t i = 0; i < 6; ++i) d.b[i] = bounded(v[i + 1], "coordinate");
    return d;
}

Outcome execute(const std::string& command, const Json& input) {
    if (command == "reduce") return cmd_reduce(input);
    if (command == "classify") return cmd_classify(input);
    if (command == "cohomology") return cmd_cohomology(input);
    if (command == "h1-ideal") return cmd_h1_ideal(input);
    if (command == "verify-core") return cmd_verify_core(input);
    if (command == "quadric") return cmd_quadric(input);
    if (command == "enumerate") return cmd_enumerate(input);
    if (command == "sweep") return cmd_sweep(input);
    if (command == "selftest") return cmd_selftest(input);
    throw DomainError("unknown command '" + command + "'");
}

Json envelope(const std::string& command, const Json& input, const Outcome& outcome) {
    return {{"schema_version", kSchemaVersion},
            {"command", command},
            {"input", input},
            {"result", outcome.result},
            {"warnings", outcome.warnings}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Divisor-class invariants on smooth cubic surfaces and Hilbert-scheme families of space curves",
                 "cubic_hilbert"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string out_path;
    std::string class_text, bidegree_text, in_path;
    Int n = 3, degree_v = 0, genus_v = 0, dmin = 0, dmax = 0, seed = 20261018;
    int box = 3, trials = 2000, max_degree = 20;
    bool all = false, omega_only = false, paranoid = false;
    std::string mode = "omega_only";

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--out", out_path, "also write the JSON envelope to this file");
    };

    auto* reduce = app.add_subcommand("reduce", "E-standard form of a class and the reflection word");
    reduce->add_option("--class", class_text, "a,b1,...,b6")->required();
    common(reduce);

    auto* cls = app.add_subcommand("classify", "Hilbert-scheme report for W_(a;b1..b6)");
    auto* cls_class = cls->add_option("--class", class_text, "a,b1,...,b6");
    auto* cls_deg = cls->add_option("--degree", degree_v);
    auto* cls_gen = cls->add_option("--genus", genus_v);
    auto* cls_all = cls->add_flag("--all", all, "report every multidegree with this degree and genus");
    cls_class->excludes(cls_deg)->excludes(cls_gen)->excludes(cls_all);
    cls_deg->needs(cls_gen)->needs(cls_all);
    cls_gen->needs(cls_deg);
    common(cls);

    auto* coh = app.add_subcommand("cohomology", "effectivity, fixed/mobile split and (h0,h1,h2) on S");
    coh->add_option("--class", class_text, "a,b1,...,b6")->required();
    common(coh);

    auto* h1 = app.add_subcommand("h1-ideal", "h1(I_C(n)) for an admissible class");
    h1->add_option("--class", class_text, "a,b1,...,b6")->required();
    h1->add_option("--n", n, "twist")->required();
    common(h1);

    auto* core = app.add_subcommand("verify-core", "lattice hypotheses and consequences for an obstructed class");
    core->add_option("--class", class_text, "a,b1,...,b6")->required();
    common(core);

    auto* quad = app.add_subcommand("quadric", "family of bidegree (a,b) curves on a smooth quadric");
    quad->add_option("--bidegree", bidegree_text, "a,b")->required();
    common(quad);

    auto* en = app.add_subcommand("enumerate", "admissible multidegrees by (d,g) or over a degree range");
    auto* en_deg = en->add_option("--degree", degree_v);
    auto* en_gen = en->add_option("--genus", genus_v);
    auto* en_min = en->add_option("--degree-min", dmin);
    auto* en_max = en->add_option("--degree-max", dmax);
    auto* en_omega = en->add_flag("--omega-only", omega_only);
    auto* en_par = en->add_flag("--paranoid", paranoid, "re-check against brute force (d <= 16)");
    en_deg->needs(en_gen);
    en_gen->needs(en_deg);
    en_min->needs(en_max)->excludes(en_deg);
    en_max->needs(en_min);
    en_omega->needs(en_min);
    en_par->needs(en_deg);
    common(en);

    auto* sw = app.add_subcommand("sweep", "classify every family over a degree range");
    sw->add_option("--degree-min", dmin)->required();
    sw->add_option("--degree-max", dmax)->required();
    sw->add_option("--mode", mode)->check(CLI::IsMember({"omega_only", "all"}));
    common(sw);

    auto* st = app.add_subcommand("selftest", "run the property suite and print a summary");
    st->add_option("--box", box, "coordinate box radius for exhaustive checks");
    st->add_option("--trials", trials, "random trials per randomized check");
    st->add_option("--max-degree", max_degree, "upper degree for Hilbert-scheme sweeps");
    st->add_option("--seed", seed);
    common(st);

    auto* ver = app.add_subcommand("verify", "recompute a saved JSON envelope and compare");
    ver->add_option("--in", in_path, "envelope written by --format json or --out")->required();
    common(ver);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitCode::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage;
    }

    try {
        Request req;
        req.command = app.get_subcommands().front()->get_name();
        if (req.command == "verify") {
            std::ifstream in(in_path);
            if (!in) throw DomainError("cannot read " + in_path);
            Json saved;
            try {
                saved = Json::parse(in);
            } catch (const Json::exception& e) {
                throw DomainError(std::string("not a JSON envelope: ") + e.what());
            }
            if (!saved.is_object() || saved.value("schema_version", "") != kSchemaVersion ||
                !saved.contains("command") || !saved.contains("input") || !saved.contains("result"))
                throw DomainError("not a schema-version-1 envelope: " + in_path);
            const std::string command = saved["command"].get<std::string>();
            const Json recomputed = envelope(command, saved["input"], execute(command, saved["input"]));
            const bool same = recomputed == saved;
            const Json result = {{"command", command}, {"identical", same}};
            if (format == "json")
                out << envelope("verify", {{"in", in_path}}, Outcome{.result = result}).dump() << '\n';
            else
                out << (same ? "identical: " : "DIFFERS: ") << command << '\n';
            return same ? ExitCode::ok : ExitCode::inconsistency;
        }

        Json& in = req.input;
        if (!class_text.empty()) in["class"] = class_json(parse_class(class_text));
        if (req.command == "h1-ideal") in["n"] = n;
        if (req.command == "quadric") {
            const std::vector<Int> v = parse_list(bidegree_text);
            if (v.size() != 2) throw DomainError("bidegree is a pair a,b");
            in["bidegree"] = v;
        }
        if (req.command == "classify" && class_text.empty()) {
            if (!all) throw DomainError("classify needs --class, or --degree and --genus with --all");
            in["degree"] = degree_v;
            in["genus"] = genus_v;
            in["all"] = true;
        }
        if (req.command == "enumerate") {
            if (en_deg->count()) {
                in["degree"] = degree_v;
                in["genus"] = genus_v;
                if (paranoid) in["paranoid"] = true;
            } else if (en_min->count()) {
                in["degree_min"] = dmin;
                in["degree_max"] = dmax;
                in["omega_only"] = omega_only;
            } else {
                throw DomainError("enumerate needs --degree/--genus or --degree-min/--degree-max");
            }
        }
        if (req.command == "sweep") {
            in["degree_min"] = dmin;
            in["degree_max"] = dmax;
            in["mode"] = mode;
        }
        if (req.command == "selftest") {
            in["box"] = box;
            in["trials"] = trials;
            in["max_degree"] = max_degree;
            in["seed"] = seed;
        }

        const Outcome outcome = execute(req.command, in);
        const Json env = envelope(req.command, in, outcome);
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) throw DomainError("cannot write " + out_path);
            f << env.dump() << '\n';
        }
        if (format == "json") {
            out << env.dump() << '\n';
        } else {
            print_table(req.command, outcome.result, out);
            for (const std::string& w : outcome.warnings) err << "warning: " << w << '\n';
        }
        return outcome.exit_code;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage;
    } catch (const InconsistencyError& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return ExitCode::inconsistency;
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << '\n';
        return ExitCode::inconsistency;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return ExitCode::inconsistency;
    }
}

}  // namespace cubic::cli
