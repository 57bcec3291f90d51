#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "rcb/io.hpp"
#include "rcb/random.hpp"
#include "rcb/transform.hpp"

namespace rcb::cli {

namespace {

struct Options {
    std::string input;
    std::string output;
    std::string backend = "default";
    std::string side = "auto";
    double tol = 1e-8;
    double radius = 0.2;
    std::size_t directions = 30;
    std::size_t samples_per_line = 24;
    std::uint64_t seed = 0;
    std::string t = "1/2";
};

Json load_json(const std::string& path) {
    if (path.empty()) throw ParseError("missing required --input file");
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw ParseError("input file '" + path + "' is not valid JSON: " + e.what());
    }
    return j;
}

void require_exact(const Options& opt, const std::string& command) {
    if (opt.backend == "float")
        throw BackendError(command + ": the float backend is not supported; use exact");
}

Side parse_side_flag(const std::string& s) {
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw ParseError("flag '--side': expected left, right, or auto, got '" + s + "'");
}

// A deterministic tangent set: the coordinate axes, then seeded small
// rational directions.
std::vector<Vector<Rational>> tangent_set(std::size_t count, std::uint64_t seed) {
    std::vector<Vector<Rational>> dirs;
    for (std::size_t i = 0; i < 4 && i < count; ++i)
        dirs.push_back(basis_vector<Rational>(4, i));
    Rng rng(seed);
    while (dirs.size() < count) dirs.push_back(rng.nonzero_vector(4, 10, 10));
    return dirs;
}

std::vector<Vector<double>> direction_set(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Vector<double>> dirs;
    for (std::size_t i = 0; i < count; ++i) dirs.push_back(rng.unit_direction(4));
    return dirs;
}

struct Outcome {
    std::string status = "pass";  // pass | fail
    Json payload;                 // written to --output when present
    Json diagnostics;
};

Outcome run_check(const Options& opt) {
    require_exact(opt, "check");
    auto gamma = quadmap_from_json(load_json(opt.input));
    auto c = check_conditions(gamma);
    Outcome r;
    if (c.ok) {
        r.payload = Json{{"lambda", to_json(c.lambda)}, {"mu", to_json(c.mu)}};
    } else {
        r.status = "fail";
        r.diagnostics = Json{{"remainder_gamma_x", to_json(c.remainder_gx)},
                             {"remainder_gamma_gamma", to_json(c.remainder_gg)}};
    }
    return r;
}

Outcome run_canonicalize(const Options& opt) {
    require_exact(opt, "canonicalize");
    auto gamma = quadmap_from_json(load_json(opt.input));
    Outcome r;
    r.payload = to_json(canonicalize(gamma));
    return r;
}

Outcome run_family(const Options& opt) {
    require_exact(opt, "family");
    auto gamma = quadmap_from_json(load_json(opt.input));
    Outcome r;
    Family f = determine_family(gamma);
    r.payload = Json{{"family", family_name(f)}};
    if (f == Family::none) r.status = "fail";
    return r;
}

Outcome run_common_point(const Options& opt) {
    require_exact(opt, "common-point");
    auto gamma = quadmap_from_json(load_json(opt.input));
    auto cp = common_point(gamma);
    Outcome r;
    switch (cp.kind) {
        case CommonPoint::Kind::point:
            r.payload = Json{{"kind", "point"}, {"point", to_json(cp.point)}};
            break;
        case CommonPoint::Kind::at_infinity:
            r.payload = Json{{"kind", "at-infinity"}};
            break;
        default:
            r.payload = Json{{"kind", "none"}};
            break;
    }
    return r;
}

Outcome run_decompose(const Options& opt) {
    require_exact(opt, "decompose");
    auto gamma = quadmap_from_json(load_json(opt.input));
    Side side;
    if (opt.side == "auto") {
        Family f = determine_family(gamma);
        if (f == Family::none) {
            Outcome r;
            r.status = "fail";
            r.diagnostics = Json{{"family", "none"}};
            return r;
        }
        side = f == Family::right ? Side::right : Side::left;
    } else {
        side = parse_side_flag(opt.side);
    }
    auto dec = decompose_quaternionic(gamma, side);
    Outcome r;
    if (!dec.ok) {
        r.status = "fail";
        Json rem = Json::array();
        for (const auto& p : dec.remainders) rem.push_back(to_json(p));
        r.diagnostics = Json{{"side", side_name(side)}, {"remainders", rem}};
        return r;
    }
    BundleDescriptor<Rational> desc{side == Side::left ? Family::left : Family::right,
                                    im_part(dec.a)};
    r.payload = to_json(desc);
    Json lines = Json::array();
    for (const auto& v : lines_subspace(dec.a)) lines.push_back(to_json(v));
    Json centers = Json::array();
    for (std::size_t i = 0; i < 4; ++i)
        centers.push_back(to_json(center_from_A(dec.a, basis_vector<Rational>(4, i), side)));
    r.diagnostics = Json{{"A", to_json(dec.a)},
                         {"lines_basis", lines},
                         {"axis_circles", centers}};
    return r;
}

Outcome run_centers(const Options& opt) {
    require_exact(opt, "centers");
    auto desc = descriptor_from_json(load_json(opt.input));
    Side side = desc.side == Family::right ? Side::right : Side::left;
    if (opt.side != "auto") side = parse_side_flag(opt.side);
    Outcome r;
    Json circles = Json::array();
    for (const auto& x : tangent_set(opt.directions, opt.seed))
        circles.push_back(to_json(center_from_A(desc.imA, x, side)));
    r.payload = std::move(circles);
    return r;
}

Outcome run_lines(const Options& opt) {
    require_exact(opt, "lines");
    auto desc = descriptor_from_json(load_json(opt.input));
    Outcome r;
    Json basis = Json::array();
    for (const auto& v : lines_subspace(desc.imA)) basis.push_back(to_json(v));
    r.payload = Json{{"basis", std::move(basis)}};
    return r;
}

Outcome run_synthesize(const Options& opt) {
    require_exact(opt, "synthesize");
    auto gamma = quadmap_from_json(load_json(opt.input));
    Outcome r;
    r.payload = to_json(synthesize_rectifier(gamma));
    return r;
}

Outcome run_verify(const Options& opt) {
    Json j = load_json(opt.input);
    PointMap map;
    double radius = opt.radius;
    Json source;
    if (j.contains("num")) {
        auto t = transform_from_json_double(j);
        map = [t](const Vector<double>& x) { return qft_apply(t, x); };
        source = Json{{"kind", "fractional-transform"}};
    } else if (j.contains("matrices")) {
        auto syn = synthesize_rectifier(quadmap_from_json(j));
        radius = std::min(radius, syn.radius);
        auto m = syn.map();
        map = [m](const Vector<double>& x) { return m.evaluate(x); };
        source = Json{{"kind", "synthesized-rectifier"}, {"certified_radius", syn.radius}};
    } else {
        throw ParseError("verify input must be a transform record ('num'/'den') or a "
                         "quadratic map record ('matrices')");
    }
    auto report = verify_rounds_lines(map, direction_set(opt.directions, opt.seed), radius,
                                      opt.tol, opt.samples_per_line);
    Outcome r;
    r.status = report.pass ? "pass" : "fail";
    r.payload = to_json(report);
    source["radius_used"] = radius;
    r.diagnostics = std::move(source);
    return r;
}

Outcome run_fit(const Options& opt) {
    Json j = load_json(opt.input);
    if (!j.is_array()) throw ParseError("fit input must be an array of circle records");
    Outcome r;
    if (opt.backend == "exact") {
        std::vector<Circle<Rational>> samples;
        for (const auto& e : j) samples.push_back(circle_from_json(e));
        auto fit = fit_bundle(samples);
        if (!fit) {
            r.status = "fail";
            r.diagnostics = Json{{"reason", "inconsistent"}};
            return r;
        }
        r.payload = to_json(*fit);
    } else {
        std::vector<Circle<double>> samples;
        for (const auto& e : j) samples.push_back(circle_from_json_double(e));
        auto fit = fit_bundle(samples, opt.tol);
        if (!fit) {
            r.status = "fail";
            r.diagnostics = Json{{"reason", "inconsistent"}};
            return r;
        }
        r.payload = to_json(*fit);
    }
    return r;
}

Outcome run_combine(const Options& opt) {
    require_exact(opt, "combine");
    Json j = load_json(opt.input);
    if (!j.contains("b1") || !j.contains("b2"))
        throw ParseError("combine input needs descriptor fields 'b1' and 'b2'");
    auto b1 = descriptor_from_json(j.at("b1"));
    auto b2 = descriptor_from_json(j.at("b2"));
    Rational t = parse_rational(opt.t);
    Outcome r;
    r.payload = to_json(barycentric_combine(b1, b2, t));
    return r;
}

void write_output(const Options& opt, const Json& payload) {
    if (opt.output.empty()) return;
    std::ofstream out(opt.output);
    if (!out) throw ParseError("cannot open output file '" + opt.output + "'");
    out << payload.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"circle bundle toolkit: rectifiability analysis and line rounding"};
    app.require_subcommand(1);

    Options opt;
    std::string command;
    const std::vector<std::pair<std::string, Outcome (*)(const Options&)>> commands = {
        {"check", run_check},           {"canonicalize", run_canonicalize},
        {"family", run_family},         {"decompose", run_decompose},
        {"common-point", run_common_point}, {"centers", run_centers},
        {"lines", run_lines},           {"synthesize", run_synthesize},
        {"verify", run_verify},         {"fit", run_fit},
        {"combine", run_combine}};

    for (const auto& [name, fn] : commands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--input", opt.input, "input file (JSON)");
        sub->add_option("--output", opt.output, "write the result payload to this file");
        sub->add_option("--backend", opt.backend)
            ->check(CLI::IsMember({"exact", "float", "default"}));
        sub->add_option("--tol", opt.tol, "acceptance tolerance");
        sub->add_option("--radius", opt.radius, "line sampling radius");
        sub->add_option("--directions", opt.directions, "number of directions / tangents");
        sub->add_option("--samples-per-line", opt.samples_per_line);
        sub->add_option("--seed", opt.seed, "random seed");
        sub->add_option("--side", opt.side)->check(CLI::IsMember({"left", "right", "auto"}));
        sub->add_option("--t", opt.t, "barycentric parameter (exact, e.g. 1/2)");
        sub->callback([&command, name = name] { command = name; });
    }

    std::vector<const char*> argv{"rcb"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "rcb: " << e.what() << "\n";
        return 2;
    }

    Json report{{"command", command}};
    try {
        Outcome res;
        for (const auto& [name, fn] : commands)
            if (name == command) res = fn(opt);
        report["status"] = res.status;
        if (!res.payload.is_null()) report["payload"] = res.payload;
        if (!res.diagnostics.is_null()) report["diagnostics"] = res.diagnostics;
        out << report.dump(2) << "\n";
        if (!res.payload.is_null()) write_output(opt, res.payload);
        err << command << ": " << res.status << "\n";
        return res.status == "pass" ? 0 : 1;
    } catch (const Error& e) {
        report["status"] = "error";
        report["error"] = e.what();
        out << report.dump(2) << "\n";
        err << command << ": error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace rcb::cli
