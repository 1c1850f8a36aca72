#include "bowforge/acceptance.hpp"
#include "bowforge/affine_weights.hpp"
#include "bowforge/bow_calculus.hpp"
#include "bowforge/errors.hpp"
#include "bowforge/fock_oracle.hpp"
#include "bowforge/maya.hpp"
#include "bowforge/serialize.hpp"
#include "bowforge/young_diagrams.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

using namespace bowforge;

namespace {

int depth_cap(int requested)
{
    if (const char* env = std::getenv("BOWFORGE_DEPTH")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 0 && cap < requested)
                return cap;
        } catch (const std::exception&) {
            throw ParseError("BOWFORGE_DEPTH must be an integer");
        }
    }
    return requested;
}

std::vector<Int> int_list(const std::string& source)
{
    Json j = load_json(source);
    if (!j.is_array())
        throw ParseError("expected a JSON array of integers");
    std::vector<Int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw ParseError("expected a JSON array of integers");
        out.push_back(x.get<Int>());
    }
    return out;
}

ColumnConvention convention_of(const std::string& s)
{
    if (s == "a")
        return ColumnConvention::Aggregate;
    if (s == "b")
        return ColumnConvention::FundamentalLift;
    throw ParseError("--convention must be a or b");
}

struct Inputs {
    std::string lambda, lambda2, mu, diagram, record, maya, w, v, m, table, state, suite = "all";
    std::string convention = "a", op;
    int i = 0, n = 2, pos = 0;
    int depth = 4;
    Int bound = 8, energy = -1, wdim = 0, vdim = 0;
    std::uint64_t seed = AcceptanceOptions{}.seed;
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"bowforge: bow diagrams, Maya fixed points and affine sl(n) oracles"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Indented JSON, or a table for verify");

    Inputs in;
    std::function<Json()> action;
    // set for verify, where text output and exit status differ
    std::optional<std::vector<AcceptanceResult>> verify_results;

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                    std::function<Json()> body) {
        CLI::App* sub = parent->add_subcommand(name, help);
        sub->callback([&action, body] { action = body; });
        return sub;
    };
    auto group = [&](const std::string& name, const std::string& help) {
        CLI::App* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        return g;
    };
    auto weight = [](const std::string& s) { return weight_from_json(load_json(s)); };

    // weights
    CLI::App* weights = group("weights", "Affine weights and the dominance order");
    auto* from_dims = leaf(weights, "from-dims", "Weights (lambda, mu) from dimension vectors w, v", [&] {
        auto w = int_list(in.w), v = int_list(in.v);
        Int level = 0;
        for (Int x : w)
            level += x;
        auto [l, m] = weight_pair_from_dims(static_cast<int>(w.size()), static_cast<int>(level), w, v);
        return Json{{"lambda", to_json(l)}, {"mu", to_json(m)}};
    });
    from_dims->add_option("--w", in.w, "JSON array w")->required();
    from_dims->add_option("--v", in.v, "JSON array v")->required();

    auto* pairing = leaf(weights, "pairing", "Coroot pairing <mu, h_i>", [&] {
        return Json{{"pairing", coroot_pairing(weight(in.mu), in.i)}};
    });
    pairing->add_option("--mu", in.mu)->required();
    pairing->add_option("--i", in.i)->required();

    auto* reflect_cmd = leaf(weights, "reflect", "Simple reflection s_i(mu)", [&] {
        return Json{{"weight", to_json(reflect(weight(in.mu), in.i))}};
    });
    reflect_cmd->add_option("--mu", in.mu)->required();
    reflect_cmd->add_option("--i", in.i)->required();

    auto* dominant = leaf(weights, "dominant", "Representative of mu in the fundamental alcove", [&] {
        return Json{{"dominant", to_json(to_dominant(weight(in.mu)))}};
    });
    dominant->add_option("--mu", in.mu)->required();

    auto* leq = leaf(weights, "leq", "Test mu <= lambda", [&] {
        auto r = dominance_leq(weight(in.mu), weight(in.lambda));
        return Json{{"holds", r.holds}, {"witness", to_json(r.witness)}};
    });
    leq->add_option("--mu", in.mu)->required();
    leq->add_option("--lambda", in.lambda)->required();

    auto* generic = leaf(weights, "generic", "Genericity of a cocharacter", [&] {
        Json j = load_json(in.m);
        if (!j.is_array())
            throw ParseError("expected a JSON array of rationals");
        std::vector<Rational> m;
        for (const auto& x : j)
            m.push_back(rational_from_json(x));
        return Json{{"generic", generic_cocharacter(m)}};
    });
    generic->add_option("--m", in.m, "JSON array of rationals")->required();

    // gyd
    CLI::App* gyd = group("gyd", "Generalized Young diagrams");
    auto* transpose = leaf(gyd, "transpose", "Level-rank transpose", [&] {
        return to_json(gyd_transpose(gyd_from_json(load_json(in.diagram))));
    });
    transpose->add_option("diagram", in.diagram, "JSON, file or -")->required();
    auto* rotate = leaf(gyd, "rotate", "Rotation of the diagram", [&] {
        return to_json(gyd_rotate(gyd_from_json(load_json(in.diagram))));
    });
    rotate->add_option("diagram", in.diagram, "JSON, file or -")->required();
    auto* gyd_weight = leaf(gyd, "from-weight", "Diagram of a dominant weight", [&] {
        return to_json(gyd_from_weight(weight(in.lambda)));
    });
    gyd_weight->add_option("--lambda", in.lambda)->required();

    // bow
    CLI::App* bow = group("bow", "Bow diagrams");
    auto bow_in = [&] { return bow_from_json(load_json(in.diagram)); };
    auto* inv = leaf(bow, "invariants", "Transition invariants", [&] { return to_json(invariants(bow_in())); });
    inv->add_option("diagram", in.diagram)->required();
    auto* hw = leaf(bow, "hw", "Hanany-Witten transition at a node pair", [&] {
        return to_json(hw_transition(bow_in(), in.pos));
    });
    hw->add_option("diagram", in.diagram)->required();
    hw->add_option("--pos", in.pos, "Index of the first node of the pair")->required();
    auto* balance = leaf(bow, "balance", "Balanced diagram of (lambda, mu) or of dimension vectors", [&] {
        if (!in.w.empty() || !in.v.empty())
            return to_json(balanced_from_dims(int_list(in.w), int_list(in.v)));
        return to_json(balanced_form(weight(in.lambda), weight(in.mu)));
    });
    balance->add_option("--lambda", in.lambda);
    balance->add_option("--mu", in.mu);
    balance->add_option("--w", in.w);
    balance->add_option("--v", in.v);
    auto* bw = leaf(bow, "weights", "Weights (lambda, mu) of a circle diagram", [&] {
        auto [l, m] = weights_of(bow_in());
        return Json{{"lambda", to_json(l)}, {"mu", to_json(m)}};
    });
    bw->add_option("diagram", in.diagram)->required();
    auto* sep = leaf(bow, "separate", "Separated form", [&] {
        auto r = separated_form(bow_in());
        return Json{{"record", to_json(r.record)},
                    {"diagram", to_json(r.diagram)},
                    {"transitions", r.transitions}};
    });
    sep->add_option("diagram", in.diagram)->required();
    auto* rot = leaf(bow, "rotate", "Move h_1 around the X nodes of a separated record", [&] {
        auto r = separated_from_json(load_json(in.record));
        auto moved = rotate_base_by_transitions(r);
        return Json{{"record", to_json(rotate_base(r))}, {"transitions", moved.transitions}};
    });
    rot->add_option("record", in.record)->required();
    auto* search = leaf(bow, "search", "Balanced diagrams reachable by transitions", [&] {
        auto r = hw_reachable_balanced(bow_in(), in.bound);
        Json ds = Json::array();
        for (const auto& d : r.balanced)
            ds.push_back(to_json(d));
        return Json{{"states", r.states}, {"balanced", ds}};
    });
    search->add_option("diagram", in.diagram)->required();
    search->add_option("--bound", in.bound, "Largest allowed dimension")->capture_default_str();

    // maya
    CLI::App* maya = group("maya", "Maya diagrams and torus fixed points");
    auto* en = leaf(maya, "enumerate", "Fixed points of (lambda, mu)", [&] {
        auto q = make_query(weight(in.lambda), weight(in.mu));
        Int bound = in.energy >= 0 ? in.energy : q.v0;
        auto r = enumerate_fixed_points(q, bound, convention_of(in.convention));
        Json j = to_json(r);
        j["query"] = to_json(q);
        return j;
    });
    en->add_option("--lambda", in.lambda)->required();
    en->add_option("--mu", in.mu)->required();
    en->add_option("--bound", in.energy, "Energy bound (default: the v0 target)");
    en->add_option("--convention", in.convention, "Column statistic reading, a or b")->capture_default_str();
    auto* ex = leaf(maya, "exists", "Existence of a fixed point", [&] {
        return Json{{"exists", t_fixed_point_exists(weight(in.lambda), weight(in.mu))}};
    });
    ex->add_option("--lambda", in.lambda)->required();
    ex->add_option("--mu", in.mu)->required();
    auto* de = leaf(maya, "deformed", "Decompositions mu = mu1 + mu2", [&] {
        Json out = Json::array();
        for (const auto& p : deformed_fixed_points(weight(in.lambda), weight(in.lambda2), weight(in.mu)))
            out.push_back(to_json(p));
        return Json{{"decompositions", out}};
    });
    de->add_option("--lambda1", in.lambda)->required();
    de->add_option("--lambda2", in.lambda2)->required();
    de->add_option("--mu", in.mu)->required();
    auto* sl2 = leaf(maya, "sl2", "sl(2)_i restriction data", [&] {
        return to_json(sl2_restriction(weight(in.lambda), weight(in.mu), in.i, depth_cap(in.depth)));
    });
    sl2->add_option("--lambda", in.lambda)->required();
    sl2->add_option("--mu", in.mu)->required();
    sl2->add_option("--i", in.i)->required();
    sl2->add_option("--depth", in.depth)->capture_default_str();
    auto* un = leaf(maya, "unwind", "Unwinding to A-infinity", [&] {
        Json t = load_json(in.table);
        if (!t.is_array())
            throw ParseError("expected an array of [m, i, v] triples");
        std::map<std::pair<Int, int>, Int> table;
        for (const auto& e : t) {
            if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer()
                || !e[1].is_number_integer() || !e[2].is_number_integer())
                throw ParseError("expected an array of [m, i, v] triples");
            table[{e[0].get<Int>(), e[1].get<int>()}] += e[2].get<Int>();
        }
        return to_json(unwind_to_a_infinity(in.n, table));
    });
    un->add_option("--n", in.n)->required();
    un->add_option("--table", in.table, "JSON array of [m, i, v]")->required();
    auto* st = leaf(maya, "stats", "Row, column and energy statistics", [&] {
        return to_json(maya_stats(maya_from_json(load_json(in.maya)), convention_of(in.convention)));
    });
    st->add_option("diagram", in.maya)->required();
    st->add_option("--convention", in.convention)->capture_default_str();
    auto* a1 = leaf(maya, "a1", "Attracting set and module dimension for A1", [&] {
        return Json{{"attracting_dim", attracting_dim_a1(in.wdim, in.vdim)},
                    {"module_dim", module_dim_a1(in.wdim)}};
    });
    a1->add_option("--w", in.wdim)->required();
    a1->add_option("--v", in.vdim)->required();

    // oracle
    CLI::App* oracle = group("oracle", "Representation-theoretic oracles");
    auto* mult = leaf(oracle, "mult", "Weight multiplicity in V(lambda)", [&] {
        return Json{{"mult", freudenthal_mult(weight(in.lambda), weight(in.mu), depth_cap(in.depth))}};
    });
    mult->add_option("--lambda", in.lambda)->required();
    mult->add_option("--mu", in.mu)->required();
    mult->add_option("--depth", in.depth)->capture_default_str();
    auto* str = leaf(oracle, "string", "Top of the i-string through mu", [&] {
        return Json{{"lambda_prime", string_top(weight(in.lambda), weight(in.mu), in.i, depth_cap(in.depth))}};
    });
    str->add_option("--lambda", in.lambda)->required();
    str->add_option("--mu", in.mu)->required();
    str->add_option("--i", in.i)->required();
    str->add_option("--depth", in.depth)->capture_default_str();
    auto* fc = leaf(oracle, "fock-count", "Fock basis states of weight mu", [&] {
        return Json{{"count", fock_weight_count(weight(in.mu))}};
    });
    fc->add_option("--mu", in.mu)->required();
    auto* vs = leaf(oracle, "verify-serre", "Commutator and Serre relations on the Fock space", [&] {
        return to_json(serre_and_commutator_check(in.n, depth_cap(in.depth)));
    });
    vs->add_option("--n", in.n)->required();
    vs->add_option("--depth", in.depth)->capture_default_str();
    auto* vc = leaf(oracle, "verify-char", "Fock character against V(Lambda_0) times partitions", [&] {
        return to_json(char_factorization_check(in.n, depth_cap(in.depth)));
    });
    vc->add_option("--n", in.n)->required();
    vc->add_option("--depth", in.depth)->capture_default_str();
    auto* vk = leaf(oracle, "verify-crystal", "Crystal of the vacuum against multiplicities", [&] {
        return to_json(crystal_completeness_check(in.n, depth_cap(in.depth)));
    });
    vk->add_option("--n", in.n)->required();
    vk->add_option("--depth", in.depth)->capture_default_str();
    auto* cr = leaf(oracle, "crystal", "Apply e~_i or f~_i to a Fock state", [&] {
        if (in.op != "e" && in.op != "f")
            throw ParseError("--op must be e or f");
        FockState s = fock_state_from_json(load_json(in.state));
        auto r = crystal_apply(in.op == "e" ? CrystalOp::E : CrystalOp::F, in.n, in.i, s);
        return Json{{"result", r ? to_json(*r) : Json(nullptr)},
                    {"epsilon", crystal_epsilon(in.n, in.i, s)},
                    {"phi", crystal_phi(in.n, in.i, s)},
                    {"weight", to_json(fock_weight(in.n, s))}};
    });
    cr->add_option("--op", in.op)->required();
    cr->add_option("--n", in.n)->required();
    cr->add_option("--i", in.i)->required();
    cr->add_option("--state", in.state, "JSON {\"flips\": [...]}")->required();

    // verify
    CLI::App* verify = app.add_subcommand("verify", "Run the acceptance checks");
    verify->add_option("--suite", in.suite, "all or a comma-separated list such as AC-1,AC-4")
        ->capture_default_str();
    verify->add_option("--depth", in.depth)->capture_default_str();
    verify->add_option("--seed", in.seed)->capture_default_str();
    verify->callback([&] {
        action = [&] {
            AcceptanceOptions opts;
            opts.depth = depth_cap(in.depth);
            opts.seed = in.seed;
            if (in.suite != "all") {
                std::string s = in.suite;
                std::size_t start = 0;
                while (start <= s.size()) {
                    auto end = s.find(',', start);
                    if (end == std::string::npos)
                        end = s.size();
                    if (end > start)
                        opts.ids.push_back(s.substr(start, end - start));
                    start = end + 1;
                }
            }
            verify_results = run_acceptance(opts);
            Json rows = Json::array();
            bool all = true;
            for (const auto& r : *verify_results) {
                all = all && r.pass;
                rows.push_back(Json{{"id", r.id},
                                    {"title", r.title},
                                    {"pass", r.pass},
                                    {"detail", r.detail},
                                    {"seconds", r.seconds},
                                    {"limit_seconds", r.limit_seconds}});
            }
            return Json{{"pass", all}, {"checks", rows}};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        Json out = action();
        if (verify_results) {
            if (pretty)
                for (const auto& r : *verify_results)
                    std::cout << format_result(r) << "\n";
            else
                std::cout << out.dump() << "\n";
            return out["pass"].get<bool>() ? 0 : 3;
        }
        std::cout << (pretty ? out.dump(2) : out.dump()) << "\n";
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "bowforge: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cout << Json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    }
}
