// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include "bullcol/certificate.hpp"
#include "bullcol/cli.hpp"
#include "bullcol/ecolor.hpp"
#include "bullcol/errors.hpp"
#include "bullcol/oracle.hpp"
#include "bullcol/pattern.hpp"
#include "bullcol/pipeline.hpp"
#include "fact_cases.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <unistd.h>

namespace fs = std::filesystem;
using namespace bullcol;
using namespace testing_support;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << detail << std::endl;
    if (!ok)
        ++failures;
}

fs::path workdir() {
    static fs::path d = [] {
        fs::path p = fs::temp_directory_path() / ("bullcol_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return d;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// Runs solve and verify the way the tool does, through files.
struct Outcome {
    int solve_code = -1;
    int verify_code = -1;
    Certificate cert;
};

Outcome solve_and_verify(const Graph& g, ClassMode mode, bool validate = true) {
    fs::path in = workdir() / "g.col", out = workdir() / "cert.json";
    std::ofstream(in) << serialize_graph(g, GraphFormat::dimacs);
    fs::remove(out);
    SolveArgs args{in.string(), mode, GraphFormat::dimacs, out.string(), validate};
    std::ostringstream sink, err;
    Outcome o;
    o.solve_code = cmd_solve(args, sink, err);
    if (!fs::exists(out)) {
        std::cerr << err.str();
        return o;
    }
    o.verify_code = cmd_verify(in.string(), out.string(), GraphFormat::dimacs, sink, err);
    o.cert = certificate_from_json(parse_graph(slurp(in), GraphFormat::dimacs), slurp(out));
    return o;
}

// Every input of criteria 1-6 goes through here; criterion 9 reads the tally.
int verified_inputs = 0, unverified_inputs = 0;

Outcome checked(const Graph& g, ClassMode mode, bool validate = true) {
    Outcome o = solve_and_verify(g, mode, validate);
    (o.verify_code == 0 ? verified_inputs : unverified_inputs)++;
    return o;
}

void oracle_agreement(int criterion, std::initializer_list<ClassMode> modes) {
    constexpr double probs[] = {0.3, 0.35, 0.4, 0.45};
    int total = 0, agree = 0, ok_cert = 0, colourable = 0;
    std::string modes_text;
    auto start = std::chrono::steady_clock::now();
    for (ClassMode mode : modes) {
        modes_text += std::string(modes_text.empty() ? "" : ", ") + std::string(class_mode_name(mode));
        for (std::uint64_t s = 1; s <= 500; ++s) {
            int n = 7 + static_cast<int>(s % 5);
            // one chair seed at n = 11 needs more than the default budget
            Graph g = random_class(n, probs[s % 4], mode, s, 2000000);
            Outcome o = checked(g, mode);
            bool oracle = oracle_3colourable(g).has_value();
            ++total;
            colourable += oracle;
            agree += (o.solve_code == kExitColourable && oracle) || (o.solve_code == kExitNotColourable && !oracle);
            ok_cert += o.verify_code == 0;
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream d;
    d << modes_text << ": " << agree << "/" << total << " agree with the oracle (" << colourable
      << " colourable), " << ok_cert << "/" << total << " certificates verify, " << static_cast<int>(secs) << " s";
    report(criterion, agree == total && ok_cert == total, d.str());
}

std::vector<int> iota_vec(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = i;
    return v;
}

// C_p plus one C apex per index in `at` (apex sees v_i, v_i+1, v_i+2).
Graph apex_host(int p, const std::vector<int>& at) {
    std::vector<Edge> e;
    int n = p;
    for (int i : at) {
        for (int o = 0; o < 3; ++o)
            e.emplace_back((i + o) % p, n);
        ++n;
    }
    return hole_plus(p, n, e);
}

void criterion4() {
    bool ok = true;
    std::ostringstream d;
    for (int p = 1; p <= 4; ++p) {
        Graph s = build_spindle(p);
        bool oracle_no = !oracle_3colourable(s).has_value();
        bool self = verify_necklace(s, spindle_necklace(p));
        Outcome o = checked(s, ClassMode::bull_chair, false);
        bool solved = o.solve_code == kExitNotColourable && o.verify_code == 0;
        ok = ok && oracle_no && self && solved;
        d << "M" << 3 * p + 1 << (oracle_no && self && solved ? " ok " : " bad ");
    }
    report(4, ok, d.str() + "(oracle, self-necklace, solve+verify)");
}

void criterion5() {
    bool ok = true;
    std::ostringstream d;

    Outcome w5 = checked(wheel_graph(5), ClassMode::bull_e);
    bool w5_ok = w5.solve_code == kExitNotColourable && w5.verify_code == 0 &&
                 std::holds_alternative<OddWheelWitness>(w5.cert.payload);
    d << "W5 " << (w5_ok ? "odd_wheel" : "bad");

    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Outcome k = checked(k4, ClassMode::bull_e);
    bool k4_ok = k.solve_code == kExitNotColourable && k.verify_code == 0 &&
                 std::holds_alternative<K4Witness>(k.cert.payload);
    d << ", K4 " << (k4_ok ? "k4" : "bad");

    Graph anti = complement_graph(cycle_graph(7));
    Outcome a = checked(anti, ClassMode::bull_e, false);
    bool anti_ok = a.solve_code == kExitNotColourable && a.verify_code == 0;
    if (anti_ok) {
        const auto* n = std::get_if<SpindleNecklace>(&a.cert.payload);
        anti_ok = n && n->diamonds() == 2;
    }
    // canonical labelling: i ~ j iff cyclic distance is 2 or 3
    auto s = find_odd_antihole7(anti);
    SpindleNecklace canon;
    if (s) {
        Graph sub = induced_subgraph(anti, *s);
        canon = extract_necklace_from_antihole(sub, iota_vec(7));
    }
    SpindleNecklace want{{0, 1, 2}, {{3, 5}, {4, 6}}};
    auto same_pairs = [](std::pair<Vertex, Vertex> x, std::pair<Vertex, Vertex> y) {
        return std::minmax(x.first, x.second) == std::minmax(y.first, y.second);
    };
    bool canon_ok = s && canon.hubs == want.hubs && canon.pairs.size() == 2 &&
                    same_pairs(canon.pairs[0], want.pairs[0]) && same_pairs(canon.pairs[1], want.pairs[1]);
    d << ", complement of C7 " << (anti_ok && canon_ok ? "necklace hubs (0,1,2) pairs {3,5},{4,6}" : "bad");

    bool cycles_ok = true;
    for (int p = 2; p <= 6; ++p) {
        Graph c = cycle_graph(2 * p + 1);
        Outcome o = checked(c, ClassMode::bull_chair);
        cycles_ok = cycles_ok && o.solve_code == kExitColourable && o.verify_code == 0 && o.cert.has_colouring() &&
                    is_proper_colouring(c, o.cert.colours());
    }
    d << ", C5..C13 " << (cycles_ok ? "coloured" : "bad");
    ok = w5_ok && k4_ok && anti_ok && canon_ok && cycles_ok;
    report(5, ok, d.str());
}

ForcingGraph apex_links(int p, const std::vector<int>& at) {
    ForcingGraph fg;
    fg.links.resize(static_cast<std::size_t>(p));
    int n = p;
    for (int i : at)
        fg.links[static_cast<std::size_t>(i)] = ForcingGadget{n++, {-1, -1}};
    return fg;
}

void criterion6() {
    HoleContext q(iota_vec(9));
    std::ostringstream d;

    Graph all = apex_host(9, iota_vec(9));
    auto r_all = colour_cycle_with_forcing(q, apex_links(9, iota_vec(9)));
    const auto* n_all = std::get_if<SpindleNecklace>(&r_all);
    bool all_ok = n_all && verify_necklace(all, *n_all) && !oracle_3colourable(all).has_value();
    // neighbouring apexes induce a bull, so the full solver rightly reports
    // the host as outside the class; its certificate still has to verify
    Outcome o_all = checked(all, ClassMode::bull_chair);
    all_ok = all_ok && o_all.solve_code == kExitNotInClass && o_all.verify_code == 0;
    d << "all nine apexes: "
      << (all_ok ? "necklace with " + std::to_string(n_all->diamonds()) + " diamonds, solver reports a bull" : "bad");

    std::vector<int> four{0, 2, 4, 6};
    Graph host = apex_host(9, four);
    auto r = colour_cycle_with_forcing(q, apex_links(9, four));
    const auto* n = std::get_if<SpindleNecklace>(&r);
    bool four_ok = n && n->hubs == VertexSet{0, 2, 4, 6, 8} && n->diamonds() == 4 && verify_necklace(host, *n) &&
                   !oracle_3colourable(host).has_value();
    Outcome o = checked(host, ClassMode::bull_chair);
    four_ok = four_ok && o.solve_code == kExitNotColourable && o.verify_code == 0 &&
              std::holds_alternative<SpindleNecklace>(o.cert.payload);
    d << "; apexes at v1,v3,v5,v7: " << (four_ok ? "M13, hubs v1,v3,v5,v7,v9" : "bad");
    report(6, all_ok && four_ok, d.str());
}

bool witness_sound(const Graph& g, const Witness& w, ClassMode mode) {
    if (!verify(g, Certificate::witness(w, mode, "")))
        return false;
    if (auto* f = std::get_if<ForbiddenPatternWitness>(&w))
        return oracle_find_pattern(induced_subgraph(g, f->vertices), f->pattern).has_value();
    VertexSet s;
    if (auto* k = std::get_if<K4Witness>(&w))
        s.assign(k->vertices.begin(), k->vertices.end());
    if (auto* o = std::get_if<OddWheelWitness>(&w)) {
        s = o->rim;
        s.push_back(o->hub);
    }
    if (auto* n = std::get_if<SpindleNecklace>(&w)) {
        s = n->hubs;
        for (auto [a, b] : n->pairs) {
            s.push_back(a);
            s.push_back(b);
        }
    }
    return !oracle_3colourable(induced_subgraph(g, s)).has_value();
}

void criterion7() {
    std::set<int> covered, bad;
    for (const FactCase& c : fact_cases()) {
        Graph g = fact_graph(c);
        if (c.fact == 3) {
            // the hole handed in is not smallest: the classifier refuses it,
            // and the pipeline reports the shorter hole as an induced C5
            bool refused = false;
            try {
                (void)fact_finding(c);
            } catch (const InternalError&) {
                refused = true;
            }
            Certificate cert = solve(g, c.mode);
            auto w = cert.witness_payload();
            if (refused && w && witness_sound(g, *w, c.mode))
                covered.insert(c.fact);
            else
                bad.insert(c.fact);
            continue;
        }
        auto f = fact_finding(c);
        if (f && witness_sound(g, f->witness, c.mode))
            covered.insert(c.fact);
        else
            bad.insert(c.fact);
    }
    std::ostringstream d;
    d << "facts with a sound witness:";
    for (int f : covered)
        d << ' ' << f;
    bool ok = bad.empty();
    for (int f = 1; f <= 19; ++f)
        ok = ok && covered.count(f);
    if (!bad.empty()) {
        d << "; failing:";
        for (int f : bad)
            d << ' ' << f;
    }
    d << " (the numbering ends at 19)";
    report(7, ok, d.str());
}

void criterion8() {
    std::mt19937_64 rng(8);
    int instances = 0, colourings = 0, good = 0, necklaces = 0, good_necklaces = 0;
    while (instances < 200) {
        int p = 7 + 2 * static_cast<int>(rng() % 5);
        HoleContext q(iota_vec(p));
        ForcingGraph fg;
        fg.links.resize(static_cast<std::size_t>(p));
        std::vector<Edge> e;
        int n = p;
        for (int i = 0; i < p; ++i) {
            if (rng() % 3 != 0)
                continue;
            if (rng() % 2 == 0) {
                for (int o = 0; o < 3; ++o)
                    e.emplace_back((i + o) % p, n);
                fg.links[static_cast<std::size_t>(i)] = ForcingGadget{n++, {-1, -1}};
            } else {
                for (int x : {n, n + 1}) {
                    e.emplace_back(i, x);
                    e.emplace_back((i + 2) % p, x);
                }
                e.emplace_back(n, n + 1);
                fg.links[static_cast<std::size_t>(i)] = ForcingGadget{-1, {n, n + 1}};
                n += 2;
            }
        }
        Graph host = hole_plus(p, n, e);
        ++instances;
        auto r = colour_cycle_with_forcing(q, fg);
        if (auto* c = std::get_if<CycleColouring>(&r)) {
            ++colourings;
            bool fine = true;
            for (int i = 0; i < p; ++i) {
                fine = fine && (*c)[static_cast<std::size_t>(i)] != (*c)[static_cast<std::size_t>(q.wrap(i + 1))];
                if (fg.has(i))
                    fine = fine && (*c)[static_cast<std::size_t>(i)] == (*c)[static_cast<std::size_t>(q.wrap(i + 2))];
            }
            good += fine;
        } else {
            ++necklaces;
            good_necklaces += verify_necklace(host, std::get<SpindleNecklace>(r));
        }
    }
    std::ostringstream d;
    d << good << "/" << colourings << " cycle colourings satisfy property (1) and are proper; " << good_necklaces
      << "/" << necklaces << " conflicts give verified necklaces";
    report(8, good == colourings && good_necklaces == necklaces && colourings > 0, d.str());
}

double median_verify_micros(const std::vector<std::pair<Graph, Certificate>>& items) {
    std::vector<double> t;
    for (const auto& [g, c] : items) {
        constexpr int reps = 2000;
        auto start = std::chrono::steady_clock::now();
        bool ok = true;
        for (int i = 0; i < reps; ++i)
            ok = ok && verify(g, c);
        double us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
        t.push_back(ok ? us / reps : 1e12);
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

void criterion9() {
    std::vector<std::pair<Graph, Certificate>> small, large;
    for (auto [n, dst] : {std::pair{10, &small}, std::pair{20, &large}})
        for (std::uint64_t seed = 1; dst->size() < 15 && seed <= 100; ++seed)
            if (auto g = try_grown(n, ClassMode::bull_e, seed, true))
                dst->emplace_back(*g, solve(*g, ClassMode::bull_e));
    double t10 = median_verify_micros(small), t20 = median_verify_micros(large);
    double ratio = t20 / t10;
    std::ostringstream d;
    d << verified_inputs << "/" << verified_inputs + unverified_inputs
      << " solver outputs from criteria 1-6 pass verify; median verify time n=10 " << t10 << " us, n=20 " << t20
      << " us, ratio " << ratio << " (limit 16)";
    report(9, unverified_inputs == 0 && verified_inputs > 0 && ratio <= 16.0, d.str());
}

} // namespace

int main() {
    oracle_agreement(1, {ClassMode::bull_chair});
    oracle_agreement(2, {ClassMode::bull_e});
    oracle_agreement(3, {ClassMode::bull_c5_s113, ClassMode::bull_c5_s123});
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    fs::remove_all(workdir());
    return failures == 0 ? 0 : 1;
}
