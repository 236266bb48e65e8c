// cstool.cpp
// Command-line front end: sampling, closed-form evaluation, branch
// maxima, monogamy thresholds, boundary tracing, product-state and
// perturbation checks, and a self-verification suite.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "csent/concurrence.hpp"
#include "csent/csx_forms.hpp"
#include "csent/cyclic.hpp"
#include "csent/extremal.hpp"
#include "csent/sampler.hpp"
#include "csent/tensor.hpp"

using json = nlohmann::ordered_json;
using namespace csent;

namespace {

constexpr const char* kVersion = "1.0.0";

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::string subspace_name(Subspace s) { return s == Subspace::CS ? "cs" : "csx"; }
std::string mode_name(ScatterMode m) {
    return m == ScatterMode::Concurrence ? "concurrence" : "subconcurrence";
}
std::string source_name(CurveSource s) {
    switch (s) {
        case CurveSource::DomainEdge: return "domain-edge";
        case CurveSource::JacobianZero: return "jacobian-zero";
        case CurveSource::ClosedForm: return "closed-form";
        case CurveSource::Envelope: return "envelope";
    }
    return "?";
}

// Minimal SVG scatter/curve canvas over the fixed viewport [-1,1]^2.
class Svg {
public:
    Svg() {
        body_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
                 "viewBox=\"0 0 640 640\">\n"
              << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
        // axes through the origin
        body_ << "<line x1=\"" << px(-1.0) << "\" y1=\"" << py(0.0) << "\" x2=\"" << px(1.0)
              << "\" y2=\"" << py(0.0) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
        body_ << "<line x1=\"" << px(0.0) << "\" y1=\"" << py(-1.0) << "\" x2=\"" << px(0.0)
              << "\" y2=\"" << py(1.0) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    }

    void comment(const std::string& text) { body_ << "<!-- " << text << " -->\n"; }

    void points(const std::vector<ConcurrencePoint>& pts, const char* color) {
        for (const auto& p : pts)
            body_ << "<circle cx=\"" << px(p.s1) << "\" cy=\"" << py(p.s2)
                  << "\" r=\"1\" fill=\"" << color << "\"/>\n";
    }

    void polyline(const std::vector<ConcurrencePoint>& pts, const char* color) {
        if (pts.size() < 2) return;
        body_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
        for (const auto& p : pts) body_ << px(p.s1) << "," << py(p.s2) << " ";
        body_ << "\"/>\n";
    }

    std::string finish() {
        body_ << "</svg>\n";
        return body_.str();
    }

private:
    static double px(double s1) { return 20.0 + (s1 + 1.0) * 300.0; }
    static double py(double s2) { return 20.0 + (1.0 - s2) * 300.0; }
    std::ostringstream body_;
};

struct Options {
    int n = 4;
    std::string subspace = "cs";
    std::uint64_t count = 1000;
    std::uint64_t seed = 0;
    std::string mode = "subconcurrence";
    int resolution = 512;
    double epsilon = 1e-3;
    std::uint64_t trials = 1000;
    std::string out;
    std::string format = "csv";
};

json config_json(const std::string& command, const Options& o) {
    json c;
    c["tool"] = "cstool";
    c["version"] = kVersion;
    c["command"] = command;
    c["n"] = o.n;
    c["subspace"] = o.subspace;
    c["count"] = o.count;
    c["seed"] = o.seed;
    c["mode"] = o.mode;
    c["resolution"] = o.resolution;
    c["epsilon"] = o.epsilon;
    c["trials"] = o.trials;
    c["format"] = o.format;
    return c;
}

std::string config_comment(const std::string& command, const Options& o) {
    std::ostringstream s;
    s << "# cstool " << kVersion << " " << command << " n=" << o.n << " subspace=" << o.subspace
      << " count=" << o.count << " seed=" << o.seed << " mode=" << o.mode
      << " resolution=" << o.resolution << " epsilon=" << fmt(o.epsilon)
      << " trials=" << o.trials << "\n";
    return s.str();
}

int cmd_sample(const Options& o) {
    SampleSpec spec{o.n, o.subspace == "csx" ? Subspace::CSX : Subspace::CS, o.count, o.seed};
    ScatterMode mode =
        o.mode == "concurrence" ? ScatterMode::Concurrence : ScatterMode::Subconcurrence;
    ScatterDataset ds = scatter(spec, mode);

    if (o.format == "json") {
        json j;
        j["config"] = config_json("sample", o);
        json pts = json::array();
        for (const auto& p : ds.points) pts.push_back({p.s1, p.s2});
        j["points"] = std::move(pts);
        write_text(o.out, j.dump(2) + "\n");
    } else if (o.format == "svg") {
        Svg svg;
        svg.comment("cstool sample n=" + std::to_string(o.n) + " subspace=" + o.subspace +
                    " count=" + std::to_string(o.count) + " seed=" + std::to_string(o.seed) +
                    " mode=" + o.mode);
        svg.points(ds.points, o.subspace == "csx" ? "#1b6ca8" : "#c23b22");
        write_text(o.out, svg.finish());
    } else {
        std::ostringstream s;
        s << config_comment("sample", o) << "s1,s2\n";
        for (const auto& p : ds.points) s << fmt(p.s1) << "," << fmt(p.s2) << "\n";
        write_text(o.out, s.str());
    }
    return 0;
}

int cmd_eval(const Options& o) {
    std::ostringstream in;
    in << std::cin.rdbuf();
    CSState st = CSState::from_json(in.str());

    json j;
    j["config"] = config_json("eval", o);
    j["n"] = st.num_qubits();
    json spacings = json::array();
    for (int k = 1; k <= st.num_qubits() / 2; ++k) {
        ComplexMatrix rho = pair_rdm(st, k);
        json e;
        e["spacing"] = k;
        e["subconcurrence"] = subconcurrence(rho);
        e["concurrence"] = concurrence(rho);
        spacings.push_back(std::move(e));
    }
    j["spacings"] = std::move(spacings);

    if (st.is_csx(1e-12) && (st.num_qubits() == 4 || st.num_qubits() == 5)) {
        BranchValues b = st.num_qubits() == 4
                             ? csx4_branches(CSX4Coeffs::from_state(st))
                             : csx5_branches(CSX5Coeffs::from_state(st));
        j["branches"] = {{"s1_mu", b.s1_mu},
                         {"s1_nu", b.s1_nu},
                         {"s2_mu", b.s2_mu},
                         {"s2_nu", b.s2_nu}};
    }
    write_text(o.out, j.dump(2) + "\n");
    return 0;
}

int cmd_maxima(const Options& o) {
    json j;
    j["config"] = config_json("maxima", o);
    json arr = json::array();
    for (Branch b : {Branch::S1Mu, Branch::S1Nu, Branch::S2Mu, Branch::S2Nu}) {
        BranchMax m = maximize_branch(b, o.n);
        json e;
        e["branch"] = to_string(b);
        e["value"] = m.value;
        e["coeffs"] = {m.coeffs[0], m.coeffs[1], m.coeffs[2], m.coeffs[3]};
        arr.push_back(std::move(e));
    }
    j["maxima"] = std::move(arr);
    write_text(o.out, j.dump(2) + "\n");
    return 0;
}

int cmd_thresholds(const Options& o) {
    json j;
    j["config"] = config_json("thresholds", o);
    json arr = json::array();
    for (const Threshold& t : thresholds(o.n, o.resolution)) {
        json e;
        e["n"] = t.n;
        e["spacing"] = t.spacing;
        e["value"] = t.value;
        e["method"] = t.closed_form ? "closed-form" : "traced";
        arr.push_back(std::move(e));
    }
    j["thresholds"] = std::move(arr);
    write_text(o.out, j.dump(2) + "\n");
    return 0;
}

int cmd_boundary(const Options& o) {
    auto curves = region_boundary(o.n, o.resolution);
    BoundaryCurve env = envelope(curves);

    if (o.format == "svg") {
        Svg svg;
        svg.comment("cstool boundary n=" + std::to_string(o.n) +
                    " resolution=" + std::to_string(o.resolution));
        for (const auto& c : curves) svg.polyline(c.points, "#888");
        svg.polyline(env.points, "#c23b22");
        write_text(o.out, svg.finish());
    } else {
        std::ostringstream s;
        s << config_comment("boundary", o) << "s1,s2,source,param_id\n";
        auto dump = [&](const BoundaryCurve& c) {
            for (const auto& p : c.points)
                s << fmt(p.s1) << "," << fmt(p.s2) << "," << source_name(c.source) << ","
                  << c.param_id << "\n";
        };
        for (const auto& c : curves) dump(c);
        dump(env);
        write_text(o.out, s.str());
    }

    if (o.n == 4) {
        // Closed-form bound vs traced envelope, on the bound's domain.
        EnvelopeProfile prof(env);
        std::ostringstream s;
        s << config_comment("boundary", o) << "s1,eq49,envelope,delta\n";
        int steps = 200;
        for (int i = 0; i <= steps; ++i) {
            double s1 = -0.5 + i / double(steps);
            double bound = eq49_bound(s1);
            double traced = prof.upper_s2(s1);
            s << fmt(s1) << "," << fmt(bound) << "," << fmt(traced) << ","
              << fmt(bound - traced) << "\n";
        }
        std::string path = (o.out.empty() || o.out == "-") ? "" : o.out + ".eq49.csv";
        write_text(path, s.str());
    }
    return 0;
}

int cmd_theorem1(const Options& o) {
    std::vector<std::pair<int, int>> cases;
    if (o.n == 4)
        cases = {{4, 2}};
    else if (o.n == 6)
        cases = {{6, 2}, {6, 3}};
    else
        throw std::invalid_argument("theorem1: n must be 4 or 6");

    bool ok = true;
    std::ostringstream s;
    for (auto [n, k] : cases) {
        CSState st = theorem1_product(n, k);
        double ck = concurrence(pair_rdm(st, k));
        double expected = (n / k == 2) ? 1.0 : 2.0 / 3.0;
        bool good = std::abs(ck - expected) < 1e-10;
        for (int sp = 1; sp <= n / 2; ++sp) {
            if (sp == k) continue;
            good = good && concurrence(pair_rdm(st, sp)) == 0.0;
        }
        ok = ok && good;
        s << (good ? "PASS" : "FAIL") << " theorem1 n=" << n << " k=" << k
          << " C_k=" << fmt(ck) << "\n";
    }
    write_text(o.out, s.str());
    if (!ok) throw std::runtime_error("theorem1 verification failed");
    return 0;
}

int cmd_theorem2(const Options& o) {
    Theorem2Result r = theorem2_check(o.epsilon, o.trials, o.seed);
    json j;
    j["config"] = config_json("theorem2", o);
    j["max_c1"] = r.max_c1;
    j["max_subconcurrence"] = r.max_subconcurrence;
    write_text(o.out, j.dump(2) + "\n");
    return 0;
}

int cmd_verify(const Options& o) {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;

    // Closed forms vs the generic Wootters pipeline on random CSX states.
    for (int n : {4, 5}) {
        double worst = 0.0;
        for (std::uint64_t i = 0; i < 2000; ++i) {
            SampleSpec spec{n, Subspace::CSX, 2000, o.seed};
            CSState st = random_state(spec, i);
            BranchValues b = n == 4 ? csx4_branches(CSX4Coeffs::from_state(st))
                                    : csx5_branches(CSX5Coeffs::from_state(st));
            double c1 = concurrence(pair_rdm(st, 1));
            double c2 = concurrence(pair_rdm(st, 2));
            worst = std::max(worst, std::abs(std::max(0.0, b.s1()) - c1));
            worst = std::max(worst, std::abs(std::max(0.0, b.s2()) - c2));
        }
        checks.push_back({"closed-form-vs-generic-n" + std::to_string(n), worst < 1e-9,
                          "max |delta| = " + fmt(worst)});
    }

    // Relabeling swaps spacings.
    {
        double worst = 0.0;
        for (std::uint64_t i = 0; i < 200; ++i) {
            SampleSpec spec{5, Subspace::CS, 200, o.seed + 1};
            CSState st = random_state(spec, i);
            CSState sw = relabel(st, Relabeling(5, 2));
            worst = std::max(worst, std::abs(subconcurrence(pair_rdm(st, 1)) -
                                             subconcurrence(pair_rdm(sw, 2))));
            worst = std::max(worst, std::abs(subconcurrence(pair_rdm(st, 2)) -
                                             subconcurrence(pair_rdm(sw, 1))));
        }
        checks.push_back({"relabel-spacing-swap", worst < 1e-10, "max |delta| = " + fmt(worst)});
    }

    // Second-branch root of the piecewise bound.
    {
        double root = (2.0 * std::sqrt(2.0) - 1.0) / 4.0;
        double v = eq49_bound(root);
        checks.push_back({"piecewise-bound-root", std::abs(v) < 1e-9, "bound(root) = " + fmt(v)});
    }

    // X-form extraction round trip on a CSX reduced density matrix.
    {
        SampleSpec spec{4, Subspace::CSX, 1, o.seed + 2};
        ComplexMatrix rho = pair_rdm(random_state(spec, 0), 1);
        ComplexMatrix back = assemble_x(extract_x(rho));
        double worst = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(rho(i, j) - back(i, j)));
        checks.push_back({"x-form-round-trip", worst < 1e-12, "max |delta| = " + fmt(worst)});
    }

    std::ostringstream s;
    bool ok = true;
    for (const auto& c : checks) {
        ok = ok && c.pass;
        s << (c.pass ? "PASS" : "FAIL") << " " << c.name << " (" << c.detail << ")\n";
    }
    write_text(o.out, s.str());
    if (!ok) throw std::runtime_error("verify: checks failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pairwise entanglement toolkit for cyclically symmetric qubit states"};
    app.require_subcommand(1);

    Options o;
    std::string command;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "number of qubits")->check(CLI::Range(2, 6));
        sub->add_option("--subspace", o.subspace, "cs|csx")
            ->check(CLI::IsMember({"cs", "csx"}));
        sub->add_option("--count", o.count, "number of samples");
        sub->add_option("--seed", o.seed, "RNG seed");
        sub->add_option("--mode", o.mode, "concurrence|subconcurrence")
            ->check(CLI::IsMember({"concurrence", "subconcurrence"}));
        sub->add_option("--resolution", o.resolution, "grid resolution")
            ->check(CLI::PositiveNumber);
        sub->add_option("--epsilon", o.epsilon, "perturbation strength");
        sub->add_option("--trials", o.trials, "number of trials");
        sub->add_option("--out", o.out, "output path ('-' or empty for stdout)");
        sub->add_option("--format", o.format, "csv|json|svg")
            ->check(CLI::IsMember({"csv", "json", "svg"}));
        sub->callback([&, sub] { command = sub->get_name(); });
    };
    for (const char* name : {"sample", "eval", "maxima", "thresholds", "boundary", "theorem1",
                             "theorem2", "verify"})
        add_common(app.add_subcommand(name));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (command == "sample") return cmd_sample(o);
        if (command == "eval") return cmd_eval(o);
        if (command == "maxima") return cmd_maxima(o);
        if (command == "thresholds") return cmd_thresholds(o);
        if (command == "boundary") return cmd_boundary(o);
        if (command == "theorem1") return cmd_theorem1(o);
        if (command == "theorem2") return cmd_theorem2(o);
        if (command == "verify") return cmd_verify(o);
        std::cerr << "error: unknown command\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
