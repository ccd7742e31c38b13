// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. argv[1], when given, is the path of the CLI binary used
// for the determinism criterion.

#include <hilbkx/cli.hpp>
#include <hilbkx/gl_complex.hpp>
#include <hilbkx/local_model.hpp>
#include <hilbkx/pfaffian.hpp>
#include <hilbkx/property_suite.hpp>
#include <hilbkx/surface_data.hpp>
#include <hilbkx/virtual_degree.hpp>

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace hilbkx;

namespace {

constexpr std::size_t kRandomInstances = 500;
constexpr std::size_t kPointsPerInstance = 100;
constexpr std::size_t kMaxP = 6;
constexpr std::size_t kMaxQ = 8;
constexpr std::int64_t kPointBound = 10;
constexpr double kDegreeTimeLimitSeconds = 10.0;

struct Criterion {
    int id;
    std::string name;
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

RationalVector random_point(Rng& rng, std::size_t dim) {
    RationalVector v(dim);
    for (auto& x : v) x = Rational(static_cast<long>(rng.uniform(-kPointBound, kPointBound)));
    return v;
}

int sign_of(long long n) { return n % 2 == 0 ? 1 : -1; }

std::string capture(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    if (pclose(pipe) != 0) out += "<nonzero exit>";
    return out;
}

std::string run_in_process(std::vector<std::string> args) {
    args.insert(args.begin(), "hilbkx");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return out.str() + "<exit " + std::to_string(code) + ">";
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> results;

    // Tensors that criteria 4-6 also run over.
    std::vector<CupTensor> family_tensors;

    // 1. Degree over the product-of-curves family.
    {
        Criterion c{1, "degree (-1)^chi on C1 x C2, g1,g2 in [2,5], under 10 s"};
        const auto start = std::chrono::steady_clock::now();
        for (long g1 = 2; g1 <= 5; ++g1)
            for (long g2 = 2; g2 <= 5; ++g2) {
                const auto spec = product_of_curves(g1, g2);
                family_tensors.push_back(spec.tensor);
                const auto d = poincare_degree(spec);
                const int expected = sign_of((1 - g1) * (1 - g2));
                if (d.degree != expected || !d.paths_agree)
                    c.fail("(" + std::to_string(g1) + "," + std::to_string(g2) + "): degree " + std::to_string(d.degree));
            }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= kDegreeTimeLimitSeconds) c.fail("took " + std::to_string(secs) + " s");
        c.detail = c.pass ? "16 surfaces, " + std::to_string(secs) + " s" : c.detail;
        results.push_back(c);
    }

    // 2-6 over random tensors.
    Criterion c2{2, "skew rank even over 500 tensors x 100 z, Pfaffian cross-check"};
    Criterion c3{3, "dim M = chi (mod 2) at the smooth witness"};
    Criterion c4{4, "A1*A0 = 0 identically"};
    Criterion c5{5, "h0 - h1 + h2 = 1 - q + p at 100 t per instance"};
    Criterion c6{6, "semicontinuity of fiber dimension and cohomology"};

    RandomCheckConfig gen;
    gen.p_max = kMaxP;
    gen.q_max = kMaxQ;
    gen.seed = 0;
    gen.density = Rational(1, 2);
    std::size_t z_checks = 0, t_checks = 0, pfaffian_checks = 0;

    std::vector<CupTensor> random_tensors;
    for (std::size_t n = 0; n < kRandomInstances; ++n) random_tensors.push_back(random_instance(gen, n).tensor);

    for (std::size_t n = 0; n < random_tensors.size(); ++n) {
        const auto& tensor = random_tensors[n];
        const std::string tag = "instance " + std::to_string(n);
        const std::size_t p = tensor.p(), q = tensor.q();
        Rng rng(derive_seed(gen.seed, {n, 7}));

        const auto pencil = build_pencil(tensor);
        std::size_t witness_rank = 0;
        try {
            const auto w = find_smooth_witness(pencil);
            witness_rank = static_cast<std::size_t>(w.rank);
            if ((w.dim_M - (1 - static_cast<long long>(q) + static_cast<long long>(p))) % 2 != 0 || !w.parity_ok)
                c3.fail(tag + ": dim M " + std::to_string(w.dim_M));
        } catch (const ParityFailure& e) {
            c2.fail(tag + ": " + e.what());
            c3.fail(tag + ": " + e.what());
        }

        for (std::size_t s = 0; s < kPointsPerInstance; ++s) {
            const auto z = random_point(rng, p);
            const auto b = pencil.evaluate(z);
            const auto r = rank(b);
            ++z_checks;
            if (r % 2) c2.fail(tag + ": odd rank at z=(" + to_string(z) + ")");
            if (q <= 8) {
                ++pfaffian_checks;
                if (pfaffian_rank(b) != r) c2.fail(tag + ": Pfaffian rank differs at z=(" + to_string(z) + ")");
            }
            if (fiber_dimension(pencil, z) < q - witness_rank)
                c6.fail(tag + ": fiber below generic at z=(" + to_string(z) + ")");
        }
    }

    family_tensors.insert(family_tensors.end(), random_tensors.begin(), random_tensors.end());
    for (std::size_t n = 0; n < family_tensors.size(); ++n) {
        const auto& tensor = family_tensors[n];
        const std::string tag = "tensor " + std::to_string(n);
        const auto cx = build_complex(tensor);
        if (!verify_complex(cx)) c4.fail(tag);
        const long long chi = 1 - static_cast<long long>(tensor.q()) + static_cast<long long>(tensor.p());
        const auto generic = generic_cohomology_dims(cx);
        Rng rng(derive_seed(gen.seed, {n, 11}));
        for (std::size_t s = 0; s < kPointsPerInstance; ++s) {
            const auto t = random_point(rng, tensor.q());
            const auto d = cohomology_dims(cx, t);
            ++t_checks;
            if (d.h0 - d.h1 + d.h2 != chi) c5.fail(tag + " at t=(" + to_string(t) + ")");
            if (d.h0 < generic.dims.h0 || d.h1 < generic.dims.h1 || d.h2 < generic.dims.h2)
                c6.fail(tag + ": cohomology below generic at t=(" + to_string(t) + ")");
        }
    }
    if (c2.pass)
        c2.detail = std::to_string(z_checks) + " ranks, " + std::to_string(pfaffian_checks) + " Pfaffian cross-checks";
    if (c3.pass) c3.detail = std::to_string(kRandomInstances) + " witnesses";
    if (c4.pass) c4.detail = std::to_string(family_tensors.size()) + " complexes";
    if (c5.pass) c5.detail = std::to_string(t_checks) + " points";
    if (c6.pass) c6.detail = std::to_string(z_checks) + " z, " + std::to_string(t_checks) + " t";
    results.push_back(c2);
    results.push_back(c3);
    results.push_back(c4);
    results.push_back(c5);
    results.push_back(c6);

    // 7. Kuenneth oracle.
    {
        Criterion c{7, "product_of_curves matches the exterior-algebra oracle, g1,g2 <= 5"};
        std::size_t compared = 0;
        for (std::size_t g1 = 0; g1 <= 5; ++g1)
            for (std::size_t g2 = 0; g2 <= 5; ++g2) {
                const auto t = product_of_curves(g1, g2).tensor;
                const auto expected = oracle::kunneth_tensor(g1, g2);
                for (std::size_t i = 0; i < t.p(); ++i)
                    for (std::size_t j = 0; j < t.q(); ++j)
                        for (std::size_t k = 0; k < t.q(); ++k) {
                            auto it = expected.find({i, j, k});
                            const Rational want = it == expected.end() ? Rational(0) : it->second;
                            ++compared;
                            if (t.at(i, j, k) != want)
                                c.fail("(" + std::to_string(g1) + "," + std::to_string(g2) + ") slot " +
                                       Slot{i, j, k}.str());
                        }
            }
        if (c.pass) c.detail = std::to_string(compared) + " entries";
        results.push_back(c);
    }

    // 8. Simple-zero sign rule.
    {
        Criterion c{8, "localized degree (-1)^n on simple zeros, DegenerateZero otherwise"};
        std::size_t models = 0;
        for (std::size_t n = 0; n <= 5; ++n)
            for (std::uint64_t s = 0; s < 50; ++s) {
                const auto m = random_simple_zero_model(n, derive_seed(0, {n, s}));
                ++models;
                try {
                    if (localized_degree_simple_point(m) != (n % 2 ? -1 : 1)) c.fail("wrong sign for n=" + std::to_string(n));
                } catch (const std::exception& e) {
                    c.fail(std::string("unexpected: ") + e.what());
                }
                if (n == 0) continue;
                try {
                    localized_degree_simple_point(random_degenerate_model(n, derive_seed(1, {n, s})));
                    c.fail("singular Jacobian accepted for n=" + std::to_string(n));
                } catch (const DegenerateZero&) {
                }
            }
        const auto x = Polynomial::variable(1, 0);
        try {
            localized_degree_simple_point(ToyCosectionModel(1, {x * x}, {Rational(0)}));
            c.fail("x^2 model accepted");
        } catch (const DegenerateZero&) {
        }
        if (c.pass) c.detail = std::to_string(models) + " simple models, 250 degenerate + x^2";
        results.push_back(c);
    }

    // 9. Determinism of structured output.
    {
        Criterion c{9, "report and sweep produce byte-identical structured output"};
        const auto dir = std::filesystem::temp_directory_path() / "hilbkx_acceptance";
        std::filesystem::create_directories(dir);
        const auto spec_path = (dir / "s23.json").string();
        std::ofstream(spec_path) << serialize_spec(product_of_curves(2, 3));

        const std::vector<std::string> report{"report", spec_path, "--format", "json", "--seed", "5"};
        const std::vector<std::string> sweep{"sweep", "--g1", "2..4", "--g2", "2..3", "--format", "json"};
        for (const auto& args : {report, sweep}) {
            const auto a = run_in_process(args), b = run_in_process(args);
            if (a != b || a.find("<exit 0>") == std::string::npos) c.fail("in-process " + args[0] + " differs");
        }
        if (argc > 1) {
            const std::string bin = argv[1];
            std::string rcmd = bin, scmd = bin;
            for (const auto& a : report) rcmd += " " + a;
            for (const auto& a : sweep) scmd += " " + a;
            for (const auto& cmd : {rcmd, scmd}) {
                const auto a = capture(cmd), b = capture(cmd);
                if (a.empty() || a != b) c.fail("binary output differs: " + cmd);
            }
            if (c.pass) c.detail = "in-process and binary runs";
        } else if (c.pass) {
            c.detail = "in-process runs only";
        }
        std::filesystem::remove_all(dir);
        results.push_back(c);
    }

    bool all = true;
    for (const auto& c : results) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
        all = all && c.pass;
    }
    std::cout << (all ? "all acceptance criteria passed" : "acceptance FAILED") << std::endl;
    return all ? 0 : 1;
}
