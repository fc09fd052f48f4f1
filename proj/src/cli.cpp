#include "noncross/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "noncross/coxeter.hpp"
#include "noncross/errors.hpp"
#include "noncross/freeprob.hpp"
#include "noncross/io.hpp"
#include "noncross/partition.hpp"
#include "noncross/randmat.hpp"
#include "noncross/topo.hpp"

namespace noncross::cli {

namespace {

using Json = nlohmann::ordered_json;
using Row = std::vector<std::string>;

struct Options {
    std::string format = "text";
    bool decimal = false;
    unsigned threads = 1;
};

// Every command fills all three renderings; the --format flag picks one.
struct Output {
    Json data = Json::object();
    std::string text;
    Row csv_header;
    std::vector<Row> csv_rows;
};

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void emit(const Output& o, const Options& opt, std::ostream& out)
{
    if (opt.format == "json") {
        out << o.data.dump(2) << '\n';
    } else if (opt.format == "csv") {
        auto line = [&](const Row& r) {
            for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_escape(r[i]);
            out << '\n';
        };
        line(o.csv_header);
        for (const auto& r : o.csv_rows) line(r);
    } else {
        out << o.text;
        if (!o.text.empty() && o.text.back() != '\n') out << '\n';
    }
}

Json partition_json(const ncp::NCPartition& p)
{
    return Json{{"m", p.ground_size()}, {"blocks", p.blocks()}};
}

Json perm_json(const cox::SignedPermutation& w) { return Json(w.window()); }

std::string join_strings(const std::vector<std::string>& v, const std::string& sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

// A sequence of rationals indexed from `first`.
Output sequence_output(const std::string& kind, const std::vector<Rational>& values, int first, const Options& opt)
{
    Output o;
    std::vector<std::string> exact, dec;
    for (const auto& v : values) {
        exact.push_back(to_string(v));
        dec.push_back(to_decimal(v));
    }
    o.data["kind"] = kind;
    o.data["first_index"] = first;
    o.data["order"] = values.size();
    o.data["values"] = exact;
    if (opt.decimal) o.data["decimal"] = dec;
    o.text = join_strings(exact, ",");
    if (opt.decimal) o.text += "\n" + join_strings(dec, ",");
    o.csv_header = {"index", "exact", "decimal"};
    for (std::size_t i = 0; i < values.size(); ++i) {
        o.csv_rows.push_back({std::to_string(first + static_cast<int>(i)), exact[i], dec[i]});
    }
    return o;
}

Output partition_output(const std::string& op, const ncp::NCPartition& r)
{
    Output o;
    o.data["operation"] = op;
    o.data["result"] = partition_json(r);
    o.data["text"] = r.to_string();
    o.text = r.to_string();
    o.csv_header = {"operation", "result"};
    o.csv_rows.push_back({op, r.to_string()});
    return o;
}

Output integer_output(const std::string& key, long long value, Json extra = Json::object())
{
    Output o;
    o.data = std::move(extra);
    o.data[key] = value;
    o.text = std::to_string(value);
    o.csv_header = {key};
    o.csv_rows.push_back({std::to_string(value)});
    return o;
}

freeprob::MomentSequence law_moments(const std::string& name, int l, int order)
{
    if (name == "semicircle") return freeprob::semicircle_moments(order);
    if (name == "mp" || name == "free-poisson") return freeprob::free_poisson_moments(order);
    if (name == "bessel") return freeprob::free_bessel_moments(l, order);
    throw InputError("unknown law '" + name + "' (expected semicircle, mp or bessel)");
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// A named yes/no check with a detail line, used by the verification commands.
Output checks_output(Json data, const std::vector<std::pair<std::string, bool>>& checks, const std::string& extra_text = "")
{
    Output o;
    o.data = std::move(data);
    bool all = true;
    Json items = Json::object();
    o.csv_header = {"check", "ok"};
    for (const auto& [name, ok] : checks) {
        items[name] = ok;
        all = all && ok;
        o.text += name + " " + yes_no(ok) + "\n";
        o.csv_rows.push_back({name, yes_no(ok)});
    }
    o.text += extra_text;
    o.data["checks"] = std::move(items);
    o.data["ok"] = all;
    o.text += "ok " + yes_no(all) + "\n";
    return o;
}

struct Dispatch {
    Options opt;
    std::function<Output()> action;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations with non-crossing partitions, free cumulants and dual Coxeter systems", "noncross"};
    app.require_subcommand(1);
    app.fallthrough();
    Dispatch d;
    app.add_option("--format", d.opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--decimal", d.opt.decimal, "Add decimal renderings of exact values");
    app.add_option("--threads", d.opt.threads, "Worker threads (0 = all cores)")->capture_default_str();

    // ------------------------------------------------------------------ nc
    auto* nc = app.add_subcommand("nc", "Non-crossing partition lattice NC(m)");
    nc->require_subcommand(1);
    int m = 0, k = 0;
    std::string p_text, q_text;
    std::string mobius_route = "both";

    auto* nc_count = nc->add_subcommand("count", "Number of non-crossing partitions of [m]");
    bool upto = false;
    nc_count->add_option("--m", m, "Ground set size")->required()->check(CLI::PositiveNumber);
    nc_count->add_flag("--upto", upto, "Also report every ground set size below m");
    nc_count->callback([&] {
        d.action = [&] {
            const auto n = static_cast<long long>(ncp::enumerate_nc(m).size());
            if (!upto) return integer_output("count", n, Json{{"m", m}});
            Output o;
            Json rows = Json::array();
            o.csv_header = {"m", "count", "catalan"};
            bool all = true;
            for (int j = 1; j <= m; ++j) {
                const auto cnt = ncp::enumerate_nc(j).size();
                const auto cat = ncp::catalan(j);
                all = all && cnt == cat;
                rows.push_back(Json{{"m", j}, {"count", cnt}, {"catalan", cat}});
                o.text += std::to_string(j) + " " + std::to_string(cnt) + "\n";
                o.csv_rows.push_back({std::to_string(j), std::to_string(cnt), std::to_string(cat)});
            }
            o.data = Json{{"m", m}, {"count", n}, {"counts", std::move(rows)}, {"ok", all}};
            return o;
        };
    });

    auto* nc_list = nc->add_subcommand("list", "List NC(m) in lexicographic block order");
    nc_list->add_option("--m", m, "Ground set size")->required()->check(CLI::PositiveNumber);
    nc_list->callback([&] {
        d.action = [&] {
            Output o;
            Json items = Json::array();
            o.csv_header = {"index", "partition", "rank"};
            std::size_t i = 0;
            for (const auto& p : ncp::enumerate_nc(m)) {
                items.push_back(partition_json(p));
                o.text += p.to_string() + "\n";
                o.csv_rows.push_back({std::to_string(i++), p.to_string(), std::to_string(ncp::rank(p))});
            }
            o.data["m"] = m;
            o.data["count"] = items.size();
            o.data["partitions"] = std::move(items);
            return o;
        };
    });

    auto* nc_kreweras = nc->add_subcommand("kreweras", "Kreweras complement");
    nc_kreweras->add_option("--p", p_text, "Partition, e.g. \"1|2 6 7|3 5|4|8\"")->required();
    nc_kreweras->callback([&] {
        d.action = [&] { return partition_output("kreweras", ncp::kreweras(ncp::parse_nc_partition(p_text))); };
    });

    auto* nc_meet = nc->add_subcommand("meet", "Meet in NC(m)");
    nc_meet->add_option("--p", p_text)->required();
    nc_meet->add_option("--q", q_text)->required();
    nc_meet->callback([&] {
        d.action = [&] {
            return partition_output("meet", ncp::meet_nc(ncp::parse_nc_partition(p_text), ncp::parse_nc_partition(q_text)));
        };
    });

    auto* nc_join = nc->add_subcommand("join", "Join in NC(m)");
    nc_join->add_option("--p", p_text)->required();
    nc_join->add_option("--q", q_text)->required();
    nc_join->callback([&] {
        d.action = [&] {
            return partition_output("join", ncp::join_nc(ncp::parse_nc_partition(p_text), ncp::parse_nc_partition(q_text)));
        };
    });

    auto* nc_mobius = nc->add_subcommand("mobius", "Moebius function mu(p, q)");
    nc_mobius->add_option("--p", p_text)->required();
    nc_mobius->add_option("--q", q_text)->required();
    nc_mobius->add_option("--route", mobius_route)
        ->check(CLI::IsMember({"recursion", "closed", "both"}))
        ->capture_default_str();
    nc_mobius->callback([&] {
        d.action = [&] {
            const auto p = ncp::parse_nc_partition(p_text);
            const auto q = ncp::parse_nc_partition(q_text);
            Json extra{{"p", p.to_string()}, {"q", q.to_string()}, {"route", mobius_route}};
            if (mobius_route == "recursion") return integer_output("mobius", ncp::mobius_nc(p, q), extra);
            if (mobius_route == "closed") return integer_output("mobius", ncp::mobius_closed(p, q), extra);
            const auto a = ncp::mobius_nc(p, q);
            const auto b = ncp::mobius_closed(p, q);
            if (a != b) throw std::logic_error("Moebius routes disagree");
            return integer_output("mobius", a, extra);
        };
    });

    auto* nc_rotate = nc->add_subcommand("rotate", "Relabel i -> i + k mod m");
    nc_rotate->add_option("--p", p_text)->required();
    nc_rotate->add_option("--k", k, "Shift")->required();
    nc_rotate->callback([&] {
        d.action = [&] { return partition_output("rotate", ncp::rotate(ncp::parse_nc_partition(p_text), k)); };
    });

    auto* nc_lattice = nc->add_subcommand("lattice", "Meet and join in NC(m) next to the partition-lattice join");
    nc_lattice->add_option("--p", p_text)->required();
    nc_lattice->add_option("--q", q_text)->required();
    nc_lattice->callback([&] {
        d.action = [&] {
            const auto p = ncp::parse_nc_partition(p_text);
            const auto q = ncp::parse_nc_partition(q_text);
            const auto meet = ncp::meet_nc(p, q);
            const auto join = ncp::join_nc(p, q);
            const auto pjoin = ncp::partition_join(p.underlying(), q.underlying());
            const bool crossing = !ncp::is_noncrossing(pjoin);
            // rk(p v q) + rk(p ^ q) <= rk(p) + rk(q)
            const bool semimodular = ncp::rank(join) + ncp::rank(meet) <= ncp::rank(p) + ncp::rank(q);
            Output o;
            o.data = Json{{"p", p.to_string()},
                          {"q", q.to_string()},
                          {"meet", partition_json(meet)},
                          {"join", partition_json(join)},
                          {"partition_join", Json{{"m", pjoin.ground_size()}, {"blocks", pjoin.blocks()}}},
                          {"partition_join_crossing", crossing},
                          {"join_is_top", join == ncp::NCPartition::top(p.ground_size())},
                          {"semimodular", semimodular}};
            o.text = "meet " + meet.to_string() + "\njoin " + join.to_string() + "\npartition_join " +
                     pjoin.to_string() + "\npartition_join_crossing " + yes_no(crossing) + "\nsemimodular " +
                     yes_no(semimodular) + "\n";
            o.csv_header = {"meet", "join", "partition_join", "partition_join_crossing", "semimodular"};
            o.csv_rows.push_back({meet.to_string(), join.to_string(), pjoin.to_string(), yes_no(crossing), yes_no(semimodular)});
            return o;
        };
    });

    auto* nc_duality = nc->add_subcommand("duality", "Check the Kreweras duality laws on NC(1..m) exhaustively");
    nc_duality->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    nc_duality->callback([&] {
        d.action = [&] {
            if (m > current_limits().topo_max_m) throw CapExceeded("nc duality: m above the topology cap");
            bool meet_law = true, join_law = true, rank_law = true, period = true;
            Json periods = Json::array();
            for (int j = 1; j <= m; ++j) {
                const auto& all = ncp::enumerate_nc(j);
                std::vector<ncp::NCPartition> comp;
                for (const auto& p : all) comp.push_back(ncp::kreweras(p));
                for (std::size_t a = 0; a < all.size(); ++a) {
                    rank_law = rank_law && ncp::rank(all[a]) + ncp::rank(comp[a]) == j - 1;
                    for (std::size_t b = 0; b < all.size(); ++b) {
                        meet_law = meet_law && ncp::kreweras(ncp::meet_nc(all[a], all[b])) == ncp::join_nc(comp[a], comp[b]);
                        join_law = join_law && ncp::kreweras(ncp::join_nc(all[a], all[b])) == ncp::meet_nc(comp[a], comp[b]);
                    }
                }
                int order = 0;
                for (int r = 1; r <= j && order == 0; ++r) {
                    bool id = true;
                    for (const auto& p : all) {
                        ncp::NCPartition x = p;
                        for (int t = 0; t < r; ++t) x = ncp::kreweras(ncp::kreweras(x));
                        id = id && x == p;
                    }
                    if (id) order = r;
                }
                periods.push_back(Json{{"m", j}, {"period", order}});
                // NC(1) and NC(2) are rotation invariant
                period = period && order == (j >= 3 ? j : 1);
            }
            return checks_output(Json{{"m", m}, {"double_complement_period", std::move(periods)}},
                                 {{"complement_of_meet_is_join", meet_law},
                                  {"complement_of_join_is_meet", join_law},
                                  {"rank_sum", rank_law},
                                  {"double_complement_period", period}});
        };
    });

    // ---------------------------------------------------------------- free
    auto* fr = app.add_subcommand("free", "Free cumulants and free convolutions (exact)");
    fr->require_subcommand(1);
    std::string seq_text, seq2_text, route = "kreweras", law_name, s_route = "cumulant";
    int order = 0, law_l = 1;
    std::uint64_t summands = 1;

    auto moments_from_args = [&]() -> freeprob::MomentSequence {
        if (!seq_text.empty()) return freeprob::MomentSequence(parse_rational_list(seq_text));
        if (law_name.empty() || order < 1) throw InputError("give --moments or --law with --order");
        return law_moments(law_name, law_l, order);
    };

    auto* fr_m2c = fr->add_subcommand("m2c", "Moments to free cumulants");
    fr_m2c->add_option("--moments", seq_text, "m_1,...,m_N");
    fr_m2c->add_option("--law", law_name);
    fr_m2c->add_option("--order", order);
    fr_m2c->add_option("--l", law_l);
    fr_m2c->callback([&] {
        d.action = [&] {
            return sequence_output("cumulants", freeprob::moments_to_cumulants(moments_from_args()).values(), 1, d.opt);
        };
    });

    auto* fr_c2m = fr->add_subcommand("c2m", "Free cumulants to moments");
    fr_c2m->add_option("--cumulants", seq_text, "kappa_1,...,kappa_N")->required();
    fr_c2m->callback([&] {
        d.action = [&] {
            const freeprob::CumulantSequence c(parse_rational_list(seq_text));
            return sequence_output("moments", freeprob::cumulants_to_moments(c).values(), 1, d.opt);
        };
    });

    auto* fr_add = fr->add_subcommand("add", "Free additive convolution of two moment sequences");
    fr_add->add_option("--m1", seq_text)->required();
    fr_add->add_option("--m2", seq2_text)->required();
    fr_add->callback([&] {
        d.action = [&] {
            const freeprob::MomentSequence a(parse_rational_list(seq_text)), b(parse_rational_list(seq2_text));
            return sequence_output("moments", freeprob::free_add_convolve(a, b).values(), 1, d.opt);
        };
    });

    auto* fr_mult = fr->add_subcommand("mult", "Free multiplicative convolution of two moment sequences");
    fr_mult->add_option("--m1", seq_text)->required();
    fr_mult->add_option("--m2", seq2_text)->required();
    fr_mult->add_option("--route", route)->check(CLI::IsMember({"kreweras", "stransform"}))->capture_default_str();
    fr_mult->callback([&] {
        d.action = [&] {
            const freeprob::MomentSequence a(parse_rational_list(seq_text)), b(parse_rational_list(seq2_text));
            const auto r = route == "kreweras" ? freeprob::free_mult_convolve_kreweras(a, b)
                                               : freeprob::free_mult_convolve_stransform(a, b);
            return sequence_output("moments", r.values(), 1, d.opt);
        };
    });

    auto* fr_law = fr->add_subcommand("law", "Moments of a named law");
    fr_law->add_option("--name", law_name)->required()->check(CLI::IsMember({"semicircle", "mp", "bessel"}));
    fr_law->add_option("--l", law_l, "Number of free Bessel factors")->capture_default_str();
    fr_law->add_option("--order", order)->required()->check(CLI::PositiveNumber);
    fr_law->callback([&] {
        d.action = [&] { return sequence_output("moments", law_moments(law_name, law_l, order).values(), 1, d.opt); };
    });

    auto* fr_clt = fr->add_subcommand("clt", "Exact moments of (a_1 + ... + a_N)/sqrt(N) for free copies");
    fr_clt->add_option("--cumulants", seq_text, "Cumulants of one summand")->required();
    fr_clt->add_option("--n", summands, "Number of summands")->required()->check(CLI::PositiveNumber);
    fr_clt->callback([&] {
        d.action = [&] {
            const auto r = freeprob::clt_moments(freeprob::CumulantSequence(parse_rational_list(seq_text)), summands);
            Output o;
            o.data["summands"] = summands;
            Json rows = Json::array();
            o.csv_header = {"k", "exact", "scaled", "decimal"};
            for (int kk = 1; kk <= r.scaled.order(); ++kk) {
                const auto ex = r.exact(kk);
                const std::string scaled = to_string(r.scaled.at(kk));
                const std::string shown = ex ? to_string(*ex) : scaled + "/sqrt(" + std::to_string(summands) + ")";
                char dec[40];
                std::snprintf(dec, sizeof dec, "%.17g", r.approx(kk));
                Json row{{"k", kk}, {"exact", ex ? Json(to_string(*ex)) : Json(nullptr)}, {"scaled", scaled}};
                if (d.opt.decimal) row["decimal"] = dec;
                rows.push_back(std::move(row));
                o.text += std::to_string(kk) + " " + shown + (d.opt.decimal ? std::string(" ") + dec : "") + "\n";
                o.csv_rows.push_back({std::to_string(kk), ex ? to_string(*ex) : "", scaled, dec});
            }
            o.data["moments"] = std::move(rows);
            return o;
        };
    });

    auto* fr_r = fr->add_subcommand("r", "R-transform coefficients of z^1..z^N");
    fr_r->add_option("--moments", seq_text);
    fr_r->add_option("--law", law_name);
    fr_r->add_option("--order", order);
    fr_r->add_option("--l", law_l);
    fr_r->callback([&] {
        d.action = [&] { return sequence_output("r_transform", freeprob::r_transform(moments_from_args()).tail(), 1, d.opt); };
    });

    auto* fr_s = fr->add_subcommand("s", "S-transform coefficients of z^0..z^{N-1}");
    fr_s->add_option("--moments", seq_text);
    fr_s->add_option("--law", law_name);
    fr_s->add_option("--order", order);
    fr_s->add_option("--l", law_l);
    fr_s->add_option("--route", s_route)->check(CLI::IsMember({"cumulant", "moment"}))->capture_default_str();
    fr_s->callback([&] {
        d.action = [&] {
            const auto s = freeprob::s_transform(moments_from_args(), s_route == "cumulant" ? freeprob::SRoute::kCumulant
                                                                                          : freeprob::SRoute::kMoment);
            return sequence_output("s_transform", s.coefficients(), 0, d.opt);
        };
    });

    auto* fr_routes = fr->add_subcommand("routes", "Compare both multiplicative convolution routes on random pairs");
    int pairs = 20;
    std::uint64_t route_seed = 7;
    fr_routes->add_option("--pairs", pairs)->capture_default_str()->check(CLI::PositiveNumber);
    fr_routes->add_option("--order", order)->required()->check(CLI::PositiveNumber);
    fr_routes->add_option("--seed", route_seed)->capture_default_str();
    fr_routes->callback([&] {
        d.action = [&] {
            std::mt19937_64 rng(route_seed);
            std::uniform_int_distribution<int> num(-7, 7), den(1, 6);
            auto draw = [&] {
                std::vector<Rational> v;
                for (int i = 0; i < order; ++i) v.emplace_back(num(rng), den(rng));
                if (v[0] == 0) v[0] = Rational(1, 2);
                return freeprob::MomentSequence(std::move(v));
            };
            int agree = 0;
            Output o;
            Json rows = Json::array();
            o.csv_header = {"pair", "m1", "m2", "product", "agree"};
            for (int i = 0; i < pairs; ++i) {
                const auto a = draw(), b = draw();
                const auto kr = freeprob::free_mult_convolve_kreweras(a, b);
                const bool same = kr == freeprob::free_mult_convolve_stransform(a, b);
                agree += same;
                auto str = [](const auto& seq) {
                    std::vector<std::string> xs;
                    for (const auto& x : seq.values()) xs.push_back(to_string(x));
                    return join_strings(xs, ",");
                };
                rows.push_back(Json{{"m1", str(a)}, {"m2", str(b)}, {"product", str(kr)}, {"agree", same}});
                o.csv_rows.push_back({std::to_string(i), str(a), str(b), str(kr), yes_no(same)});
            }
            o.data = Json{{"pairs", pairs}, {"order", order}, {"seed", route_seed}, {"agreeing", agree},
                          {"results", std::move(rows)}, {"ok", agree == pairs}};
            o.text = "pairs " + std::to_string(pairs) + "\nagreeing " + std::to_string(agree) + "\nok " +
                     yes_no(agree == pairs) + "\n";
            return o;
        };
    });

    auto* fr_gap = fr->add_subcommand("cltgap", "N |m_2k(N) - C_k| for free sums of N copies");
    std::string n_list = "16,32,64,128,256,512,1024,2048,4096";
    int kmax = 4;
    fr_gap->add_option("--cumulants", seq_text, "Standardized cumulants of one summand")->required();
    fr_gap->add_option("--n", n_list, "Summand counts")->capture_default_str();
    fr_gap->add_option("--kmax", kmax)->capture_default_str()->check(CLI::PositiveNumber);
    fr_gap->callback([&] {
        d.action = [&] {
            const freeprob::CumulantSequence base(parse_rational_list(seq_text));
            if (base.order() < 2 * kmax) throw InputError("cltgap: need 2*kmax cumulants");
            const auto catalan = freeprob::semicircle_moments(2 * kmax);
            Output o;
            Json rows = Json::array();
            o.csv_header = {"k", "n", "gap", "decimal"};
            bool bounded = true;
            for (int kk = 1; kk <= kmax; ++kk) {
                Rational first = -1;
                for (int n : parse_int_list(n_list)) {
                    if (n < 1) throw InputError("cltgap: summand counts must be positive");
                    const auto r = freeprob::clt_moments(base, static_cast<std::uint64_t>(n));
                    Rational gap = (*r.exact(2 * kk) - catalan.at(2 * kk)) * n;
                    if (gap < 0) gap = -gap;
                    if (first < 0) first = gap;
                    bounded = bounded && gap <= first;
                    rows.push_back(Json{{"k", kk}, {"n", n}, {"gap", to_string(gap)}});
                    o.text += "k=" + std::to_string(kk) + " N=" + std::to_string(n) + " " + to_string(gap) + "\n";
                    o.csv_rows.push_back({std::to_string(kk), std::to_string(n), to_string(gap), to_decimal(gap)});
                }
            }
            o.data = Json{{"kmax", kmax}, {"gaps", std::move(rows)}, {"bounded", bounded}};
            o.text += "bounded " + yes_no(bounded) + "\n";
            return o;
        };
    });

    // ----------------------------------------------------------------- cox
    auto* cx = app.add_subcommand("cox", "Dual Coxeter systems of type A, B, D");
    cx->require_subcommand(1);
    std::string family_text, w_text, c_text;
    int rank_n = 0;
    bool scan_all = false;
    auto add_group_opts = [&](CLI::App* sub) {
        sub->add_option("--family", family_text, "A, B or D")->required()->check(CLI::IsMember({"A", "B", "D"}));
        sub->add_option("--rank", rank_n, "Rank n")->required()->check(CLI::PositiveNumber);
        sub->add_option("--c", c_text, "Coxeter element, default product of simple reflections");
    };
    auto context = [&] { return cox::CoxeterContext(cox::parse_family(family_text), rank_n); };
    auto coxeter_of = [&](const cox::CoxeterContext& ctx) {
        if (c_text.empty()) return ctx.coxeter_element();
        auto c = cox::parse_signed_permutation(c_text);
        ctx.absolute_length(c);
        return c;
    };
    auto element_of = [&](const cox::CoxeterContext& ctx, const cox::SignedPermutation& fallback) {
        if (w_text.empty()) return fallback;
        auto w = cox::parse_signed_permutation(w_text);
        ctx.absolute_length(w);
        return w;
    };
    auto group_json = [&](const cox::CoxeterContext& ctx, const cox::SignedPermutation& c) {
        return Json{{"group", ctx.name()}, {"order", ctx.order()}, {"coxeter_element", perm_json(c)}};
    };

    auto* cx_ncset = cx->add_subcommand("ncset", "List NC(W, c)");
    add_group_opts(cx_ncset);
    cx_ncset->callback([&] {
        d.action = [&] {
            const auto ctx = context();
            const auto c = coxeter_of(ctx);
            const auto nc_elems = cox::nc_set(ctx, c);
            Output o;
            o.data = group_json(ctx, c);
            o.data["count"] = nc_elems.size();
            Json items = Json::array();
            o.csv_header = {"element", "length"};
            for (const auto& u : nc_elems) {
                const int len = ctx.absolute_length(u);
                items.push_back(Json{{"element", perm_json(u)}, {"length", len}});
                o.text += u.to_string() + " " + std::to_string(len) + "\n";
                o.csv_rows.push_back({u.to_string(), std::to_string(len)});
            }
            o.data["elements"] = std::move(items);
            return o;
        };
    });

    auto* cx_count = cx->add_subcommand("nccount", "Size of NC(W, c)");
    add_group_opts(cx_count);
    cx_count->callback([&] {
        d.action = [&] {
            const auto ctx = context();
            const auto c = coxeter_of(ctx);
            return integer_output("count", static_cast<long long>(cox::nc_set(ctx, c).size()), group_json(ctx, c));
        };
    });

    auto* cx_redt = cx->add_subcommand("redt", "Reduced reflection factorizations of w (default c)");
    add_group_opts(cx_redt);
    cx_redt->add_option("--w", w_text, "Element, e.g. [2,-1,3]");
    cx_redt->callback([&] {
        d.action = [&] {
            const auto ctx = context();
            const auto w = element_of(ctx, coxeter_of(ctx));
            const auto all = cox::red_t_factorizations(ctx, w);
            Output o;
            o.data = Json{{"group", ctx.name()}, {"element", perm_json(w)}, {"length", ctx.absolute_length(w)},
                          {"count", all.size()}};
            Json items = Json::array();
            o.csv_header = {"index", "factorization"};
            for (std::size_t i = 0; i < all.size(); ++i) {
                const std::string s = all[i].to_string(ctx);
                items.push_back(s);
                o.text += s + "\n";
                o.csv_rows.push_back({std::to_string(i), s});
            }
            o.data["factorizations"] = std::move(items);
            return o;
        };
    });

    auto* cx_hurwitz = cx->add_subcommand("hurwitz", "Hurwitz orbits on Red_T(w)");
    add_group_opts(cx_hurwitz);
    cx_hurwitz->add_option("--w", w_text, "Element (default c)");
    cx_hurwitz->add_flag("--all", scan_all, "Report every element within the length cap");
    cx_hurwitz->callback([&] {
        d.action = [&] {
            const auto ctx = context();
            std::vector<cox::SignedPermutation> targets;
            if (scan_all) {
                const int cap = current_limits().redt_max_length;
                for (const auto& u : ctx.elements()) {
                    if (ctx.absolute_length(u) <= cap) targets.push_back(u);
                }
            } else {
                targets.push_back(element_of(ctx, coxeter_of(ctx)));
            }
            Output o;
            o.data["group"] = ctx.name();
            Json items = Json::array();
            o.csv_header = {"element", "l_T", "red_t", "orbits"};
            for (const auto& w : targets) {
                const auto rep = cox::hurwitz_orbits(ctx, w);
                const int len = ctx.absolute_length(w);
                items.push_back(Json{{"element", perm_json(w)},
                                     {"length", len},
                                     {"factorizations", rep.factorizations},
                                     {"orbits", rep.orbit_sizes.size()},
                                     {"orbit_sizes", rep.orbit_sizes},
                                     {"quasi_coxeter", cox::is_quasi_coxeter(ctx, w)},
                                     {"parabolic_quasi_coxeter", cox::is_parabolic_quasi_coxeter(ctx, w)}});
                std::vector<std::string> sizes;
                for (auto s : rep.orbit_sizes) sizes.push_back(std::to_string(s));
                o.text += w.to_string() + " l_T=" + std::to_string(len) + " red_t=" + std::to_string(rep.factorizations) +
                          " orbits=" + std::to_string(rep.orbit_sizes.size()) + " sizes=" + join_strings(sizes, ",") + "\n";
                o.csv_rows.push_back({w.to_string(), std::to_string(len), std::to_string(rep.factorizations),
                                      std::to_string(rep.orbit_sizes.size())});
            }
            o.data["reports"] = std::move(items);
            return o;
        };
    });

    auto* cx_quasi = cx->add_subcommand("quasicox", "Quasi-Coxeter and parabolic quasi-Coxeter tests");
    add_group_opts(cx_quasi);
    cx_quasi->add_option("--w", w_text, "Element (default c)");
    cx_quasi->add_flag("--all", scan_all, "Test every element");
    cx_quasi->callback([&] {
        d.action = [&] {
            const auto ctx = context();
            const auto c = coxeter_of(ctx);
            std::vector<cox::SignedPermutation> targets;
            if (scan_all) {
                targets = ctx.elements();
            } else {
                targets.push_back(element_of(ctx, c));
            }
            const auto cls = cox::conjugacy_class(ctx, c);
            Output o;
            o.data = group_json(ctx, c);
            Json items = Json::array();
            o.csv_header = {"element", "l_T", "quasi_coxeter", "parabolic_quasi_coxeter", "coxeter_conjugate"};
            for (const auto& w : targets) {
                const int len = ctx.absolute_length(w);
                const bool qc = cox::is_quasi_coxeter(ctx, w);
                const bool pqc = cox::is_parabolic_quasi_coxeter(ctx, w);
                const bool conj = std::binary_search(cls.begin(), cls.end(), w);
                items.push_back(Json{{"element", perm_json(w)},
                                     {"length", len},
                                     {"quasi_coxeter", qc},
                                     {"parabolic_quasi_coxeter", pqc},
                                     {"coxeter_conjugate", conj}});
                auto yn = [](bool b) { return std::string(b ? "true" : "false"); };
                o.text += w.to_string() + " l_T=" + std::to_string(len) + " quasi_coxeter=" + yn(qc) +
                          " parabolic_quasi_coxeter=" + yn(pqc) + " coxeter_conjugate=" + yn(conj) + "\n";
                o.csv_rows.push_back({w.to_string(), std::to_string(len), yn(qc), yn(pqc), yn(conj)});
            }
            o.data["elements"] = std::move(items);
            return o;
        };
    });

    auto* cx_dual = cx->add_subcommand("dualrel", "Dual braid relations for (W, c)");
    add_group_opts(cx_dual);
    cx_dual->callback([&] {
        d.action = [&] {
            const auto ctx = context();
            const auto c = coxeter_of(ctx);
            const auto rels = cox::dual_braid_relations(ctx, c);
            const bool ok = cox::dual_braid_relation_check(ctx, c);
            const auto& t = ctx.reflections();
            Output o;
            o.data = group_json(ctx, c);
            o.data["count"] = rels.size();
            o.data["check"] = ok;
            Json items = Json::array();
            o.csv_header = {"left", "right"};
            for (const auto& r : rels) {
                const std::string lhs = t[r.left_first].name + " " + t[r.left_second].name;
                const std::string rhs = t[r.right_first].name + " " + t[r.right_second].name;
                items.push_back(Json{{"left", lhs}, {"right", rhs}});
                o.text += lhs + " = " + rhs + "\n";
                o.csv_rows.push_back({lhs, rhs});
            }
            o.text += std::string("check ") + (ok ? "passed" : "failed") + "\n";
            o.data["relations"] = std::move(items);
            return o;
        };
    });

    auto* cx_confine = cx->add_subcommand("confine", "Reflections of Red_T(w) against the parabolic closure, sampled w");
    add_group_opts(cx_confine);
    int samples = 50;
    std::uint64_t sample_seed = 12;
    cx_confine->add_option("--samples", samples)->capture_default_str()->check(CLI::PositiveNumber);
    cx_confine->add_option("--seed", sample_seed)->capture_default_str();
    cx_confine->callback([&] {
        d.action = [&] {
            const auto ctx = context();
            std::mt19937_64 rng(sample_seed);
            std::uniform_int_distribution<std::size_t> pick(1, ctx.order() - 1);
            Output o;
            Json rows = Json::array();
            o.csv_header = {"element", "l_T", "parabolic_quasi_coxeter", "in_closure", "in_generated"};
            bool closure_ok = true, pqc_ok = true;
            int pqc_count = 0;
            for (int i = 0; i < samples; ++i) {
                const auto w = ctx.elements()[pick(rng)];
                const auto red = cox::red_t_factorizations(ctx, w);
                const auto pw = cox::parabolic_closure(ctx, w);
                const auto gen = cox::generated_subgroup(ctx, red.front().factors);
                const std::set<cox::SignedPermutation> closure(pw.begin(), pw.end()), generated(gen.begin(), gen.end());
                bool in_closure = true, in_generated = true;
                for (const auto& f : red)
                    for (const auto& t : f.factors) {
                        in_closure = in_closure && closure.count(t);
                        in_generated = in_generated && generated.count(t);
                    }
                const bool pqc = cox::is_parabolic_quasi_coxeter(ctx, w);
                pqc_count += pqc;
                closure_ok = closure_ok && in_closure;
                if (pqc) pqc_ok = pqc_ok && in_generated;
                rows.push_back(Json{{"element", perm_json(w)},
                                    {"length", ctx.absolute_length(w)},
                                    {"parabolic_quasi_coxeter", pqc},
                                    {"in_parabolic_closure", in_closure},
                                    {"in_generated_subgroup", in_generated}});
                o.csv_rows.push_back({w.to_string(), std::to_string(ctx.absolute_length(w)), yes_no(pqc),
                                      yes_no(in_closure), yes_no(in_generated)});
            }
            o.data = Json{{"group", ctx.name()},
                          {"samples", samples},
                          {"seed", sample_seed},
                          {"parabolic_quasi_coxeter", pqc_count},
                          {"elements", std::move(rows)},
                          {"confined_to_closure", closure_ok},
                          {"confined_to_generated_when_parabolic", pqc_ok},
                          {"ok", closure_ok && pqc_ok}};
            o.text = "samples " + std::to_string(samples) + "\nparabolic_quasi_coxeter " + std::to_string(pqc_count) +
                     "\nconfined_to_closure " + yes_no(closure_ok) + "\nconfined_to_generated_when_parabolic " +
                     yes_no(pqc_ok) + "\nok " + yes_no(closure_ok && pqc_ok) + "\n";
            return o;
        };
    });

    auto* cx_ncperm = cx->add_subcommand("ncperm", "Refinement on NC(m) against absolute order below the long cycle");
    cx_ncperm->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    cx_ncperm->callback([&] {
        d.action = [&] {
            if (m < 2) throw InputError("ncperm: m must be at least 2");
            const cox::CoxeterContext ctx(cox::Family::A, m - 1);
            const auto c = ctx.coxeter_element();
            const auto& all = ncp::enumerate_nc(m);
            std::vector<cox::SignedPermutation> perms;
            for (const auto& p : all) perms.push_back(cox::partition_to_permutation(p));
            bool below_c = true, iso = true, additive = true;
            std::size_t comparable = 0;
            for (std::size_t a = 0; a < all.size(); ++a) {
                below_c = below_c && ctx.abs_le(perms[a], c);
                for (std::size_t b = 0; b < all.size(); ++b) {
                    const bool le = ncp::refine_le(all[a], all[b]);
                    iso = iso && le == ctx.abs_le(perms[a], perms[b]);
                    if (!le) continue;
                    ++comparable;
                    const auto rest = perms[a].inverse() * perms[b];
                    additive = additive &&
                               ctx.absolute_length(perms[b]) == ctx.absolute_length(perms[a]) + ctx.absolute_length(rest);
                }
            }
            return checks_output(Json{{"m", m}, {"partitions", all.size()}, {"comparable_pairs", comparable}},
                                 {{"below_long_cycle", below_c}, {"order_isomorphism", iso}, {"length_additive", additive}});
        };
    });

    // ---------------------------------------------------------------- topo
    auto* tp = app.add_subcommand("topo", "Order complexes of NC intervals");
    tp->require_subcommand(1);

    auto* tp_euler = tp->add_subcommand("euler", "Reduced Euler characteristic of an open interval vs Moebius");
    tp_euler->add_option("--p", p_text);
    tp_euler->add_option("--q", q_text);
    tp_euler->add_option("--m", m, "Check every interval of NC(m) instead");
    tp_euler->callback([&] {
        d.action = [&] {
            Output o;
            if (!p_text.empty() || !q_text.empty()) {
                const auto p = ncp::parse_nc_partition(p_text);
                const auto q = ncp::parse_nc_partition(q_text);
                const auto complex = topo::order_complex_open_interval(p, q);
                const auto f = complex.f_vector();
                const auto chi = topo::reduced_euler_characteristic(complex);
                const auto mu = ncp::mobius_nc(p, q);
                o.data = Json{{"p", p.to_string()}, {"q", q.to_string()}, {"vertices", complex.vertex_count()},
                              {"f_vector", f}, {"reduced_euler_characteristic", chi}, {"mobius", mu},
                              {"agree", chi == mu}};
                std::vector<std::string> fs;
                for (auto x : f) fs.push_back(std::to_string(x));
                o.text = "f_vector " + join_strings(fs, ",") + "\nreduced_euler " + std::to_string(chi) + "\nmobius " +
                         std::to_string(mu) + "\n";
                o.csv_header = {"p", "q", "f_vector", "reduced_euler", "mobius"};
                o.csv_rows.push_back({p.to_string(), q.to_string(), join_strings(fs, " "), std::to_string(chi),
                                      std::to_string(mu)});
                return o;
            }
            if (m < 1) throw InputError("give --p and --q, or --m");
            if (m > current_limits().topo_max_m) throw CapExceeded("order complexes limited to m <= " +
                                                                  std::to_string(current_limits().topo_max_m));
            const auto poset = topo::nc_poset(m);
            std::size_t intervals = 0, agree = 0;
            for (std::size_t i = 0; i < poset.size(); ++i) {
                const auto mu = poset.mobius_from(i);
                for (std::size_t j = 0; j < poset.size(); ++j) {
                    if (!poset.less(i, j)) continue;
                    ++intervals;
                    const auto chi = topo::reduced_euler_characteristic(topo::chain_f_vector(poset, poset.open_interval(i, j)));
                    agree += chi == mu[j];
                }
            }
            o.data = Json{{"m", m}, {"intervals", intervals}, {"agreeing", agree}, {"all_agree", agree == intervals}};
            o.text = "intervals " + std::to_string(intervals) + "\nagreeing " + std::to_string(agree) + "\n";
            o.csv_header = {"m", "intervals", "agreeing"};
            o.csv_rows.push_back({std::to_string(m), std::to_string(intervals), std::to_string(agree)});
            return o;
        };
    });

    auto* tp_chains = tp->add_subcommand("chains", "Maximal chain census of NC(m)");
    tp_chains->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    tp_chains->callback([&] {
        d.action = [&] {
            const auto census = topo::chain_census(m);
            Output o;
            Json by_len = Json::object();
            o.csv_header = {"length", "maximal_chains"};
            for (const auto& [len, cnt] : census.maximal_chains_by_length) {
                by_len[std::to_string(len)] = cnt;
                o.csv_rows.push_back({std::to_string(len), std::to_string(cnt)});
            }
            o.data = Json{{"m", m},
                          {"max_length", census.max_length},
                          {"maximal_chains", census.maximal_chain_count},
                          {"by_length", by_len},
                          {"graded", census.graded}};
            o.text = "max_length " + std::to_string(census.max_length) + "\nmaximal_chains " +
                     std::to_string(census.maximal_chain_count) + "\ngraded " + (census.graded ? "true" : "false") + "\n";
            return o;
        };
    });

    // ----------------------------------------------------------------- rmt
    auto* rm = app.add_subcommand("rmt", "Monte Carlo checks of Ginibre moment limits");
    rm->require_subcommand(1);
    auto* rm_verify = rm->add_subcommand("verify", "Estimate (1/N) E tr (W W^*)^k against the free Bessel moment");
    std::string rm_family = "product";
    rmt::GinibreSpec spec;
    int rm_k = 1;
    bool rm_json = false;
    rm_verify->add_option("--family", rm_family)->check(CLI::IsMember({"product", "power"}))->capture_default_str();
    rm_verify->add_option("--l", spec.l, "Number of factors / power")->capture_default_str();
    rm_verify->add_option("--k", rm_k, "Moment order")->capture_default_str();
    rm_verify->add_option("--n", spec.n, "Matrix dimension")->capture_default_str();
    rm_verify->add_option("--trials", spec.trials)->capture_default_str();
    rm_verify->add_option("--seed", spec.seed)->capture_default_str();
    rm_verify->add_flag("--json", rm_json, "Same as --format json");
    rm_verify->callback([&] {
        d.action = [&] {
            if (rm_json) d.opt.format = "json";
            spec.threads = d.opt.threads;
            const auto e = rm_family == "product" ? rmt::estimate_product_moment(spec, rm_k)
                                                  : rmt::estimate_power_moment(spec, rm_k);
            Output o;
            o.data = Json{{"family", rm_family}, {"l", spec.l},     {"k", rm_k},
                          {"n", spec.n},         {"trials", spec.trials}, {"seed", spec.seed},
                          {"estimate", e.mean},  {"stderr", e.std_error}, {"target", to_string(e.target)},
                          {"z_score", e.z_score}};
            char buf[256];
            std::snprintf(buf, sizeof buf, "estimate %.10g\nstderr %.6g\ntarget %s\nz_score %.4f\n", e.mean, e.std_error,
                          to_string(e.target).c_str(), e.z_score);
            o.text = buf;
            o.csv_header = {"family", "l", "k", "n", "trials", "seed", "estimate", "stderr", "target", "z_score"};
            o.csv_rows.push_back({rm_family, std::to_string(spec.l), std::to_string(rm_k), std::to_string(spec.n),
                                  std::to_string(spec.trials), std::to_string(spec.seed), std::to_string(e.mean),
                                  std::to_string(e.std_error), to_string(e.target), std::to_string(e.z_score)});
            return o;
        };
    });

    auto* rm_suite = rm->add_subcommand("suite", "Moments k = 1..kmax for products (and powers when l >= 2)");
    int suite_kmax = 4;
    rm_suite->add_option("--l", spec.l)->capture_default_str();
    rm_suite->add_option("--kmax", suite_kmax)->capture_default_str()->check(CLI::PositiveNumber);
    rm_suite->add_option("--n", spec.n)->capture_default_str();
    rm_suite->add_option("--trials", spec.trials)->capture_default_str();
    rm_suite->add_option("--seed", spec.seed)->capture_default_str();
    rm_suite->callback([&] {
        d.action = [&] {
            spec.threads = d.opt.threads;
            std::vector<std::string> families{"product"};
            if (spec.l >= 2) families.push_back("power");
            Output o;
            Json rows = Json::array();
            o.csv_header = {"family", "k", "estimate", "stderr", "target", "z_score", "within"};
            bool all = true;
            for (int kk = 1; kk <= suite_kmax; ++kk) {
                for (const auto& fam : families) {
                    const auto e = fam == "product" ? rmt::estimate_product_moment(spec, kk)
                                                    : rmt::estimate_power_moment(spec, kk);
                    const bool within = std::abs(e.mean - to_double(e.target)) <= 4 * e.std_error;
                    all = all && within;
                    rows.push_back(Json{{"family", fam}, {"k", kk}, {"estimate", e.mean}, {"stderr", e.std_error},
                                        {"target", to_string(e.target)}, {"z_score", e.z_score}, {"within_4_stderr", within}});
                    char buf[200];
                    std::snprintf(buf, sizeof buf, "%s k=%d %.6f +- %.6f target %s z=%.3f\n", fam.c_str(), kk, e.mean,
                                  e.std_error, to_string(e.target).c_str(), e.z_score);
                    o.text += buf;
                    o.csv_rows.push_back({fam, std::to_string(kk), std::to_string(e.mean), std::to_string(e.std_error),
                                          to_string(e.target), std::to_string(e.z_score), yes_no(within)});
                }
            }
            o.data = Json{{"l", spec.l}, {"n", spec.n}, {"trials", spec.trials}, {"seed", spec.seed},
                          {"estimates", std::move(rows)}, {"ok", all}};
            o.text += "ok " + yes_no(all) + "\n";
            return o;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (!d.action) {
        err << "error: no command given\n";
        return 2;
    }
    try {
        const Output o = d.action();
        emit(o, d.opt, out);
        return 0;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace noncross::cli
