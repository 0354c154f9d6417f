#pragma once

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lielevel/branching.hpp"
#include "lielevel/classify.hpp"
#include "lielevel/dimension.hpp"
#include "lielevel/errors.hpp"
#include "lielevel/freudenthal.hpp"
#include "lielevel/harmonic.hpp"
#include "lielevel/orbits.hpp"
#include "lielevel/partition.hpp"
#include "lielevel/reduction.hpp"
#include "lielevel/serialize.hpp"
#include "lielevel/thm_a1.hpp"
#include "lielevel/weight.hpp"

namespace lielevel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitFailedCheck = 2;
inline constexpr int kExitUsage = 64;

namespace detail {

inline std::vector<int> parse_weight(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    std::stringstream ss(s);
    while (std::getline(ss, cur, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(cur, &pos);
        } catch (const std::exception&) {
            throw CLI::ValidationError("weight", "malformed weight entry '" + cur + "'");
        }
        if (pos != cur.size())
            throw CLI::ValidationError("weight", "malformed weight entry '" + cur + "'");
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("weight", "empty weight string");
    return out;
}

inline GroupDesc parse_group(const std::string& fam, int n) {
    if (fam == "sl") return GroupDesc::sl(n);
    if (fam == "sp") return GroupDesc::sp(n);
    if (fam == "so") return GroupDesc::so(n);
    if (fam == "o") return GroupDesc::o(n);
    if (fam == "g2") return GroupDesc::g2();
    throw CLI::ValidationError("group", "unknown group family '" + fam + "'");
}

inline OLabel parse_label(const std::string& s) {
    if (s.empty() || s == "none") return OLabel::None;
    if (s == "plus") return OLabel::Plus;
    if (s == "minus") return OLabel::Minus;
    if (s == "empty") return OLabel::Empty;
    throw CLI::ValidationError("label", "unknown label '" + s + "'");
}

struct GoldenResult {
    std::string name;
    std::string expected;
    std::string got;
};

/// Every fixed numeric claim reachable through the library, evaluated fresh.
inline std::vector<GoldenResult> selftest_results() {
    std::vector<GoldenResult> out;
    auto add = [&](const std::string& name, const std::string& expected, const std::string& got) {
        out.push_back({name, expected, got});
    };
    auto istr = [](const Int& v) { return to_string(v); };

    add("group dim Sp8", "36", istr(group_dim(GroupDesc::sp(4))));
    add("group dim G2", "14", istr(group_dim(GroupDesc::g2())));
    add("dim Sp8 (1,1,1,1)", "42", istr(irrep_dim(GroupDesc::sp(4), DominantWeight{{1, 1, 1, 1}})));
    add("dim Sp6 (1,1,1)", "14", istr(irrep_dim(GroupDesc::sp(3), DominantWeight{{1, 1, 1}})));
    add("dim Sp8 (1,1,1,0)", "48", istr(irrep_dim(GroupDesc::sp(4), DominantWeight{{1, 1, 1, 0}})));
    add("dim Sp4 (1,1)", "5", istr(irrep_dim(GroupDesc::sp(2), DominantWeight{{1, 1}})));
    add("dim SL3 (2,1,0)", "8", istr(irrep_dim(GroupDesc::sl(3), DominantWeight{{2, 1, 0}})));
    add("schur dim (4,2) over C^3", "27", istr(gl_partition_dim(Partition({4, 2}), 3)));
    add("mult of (1,0,0,0,0) in SO10 (1,1,1,0,0)", "4",
        istr(weight_multiplicity(GroupDesc::so(10), DominantWeight{{1, 1, 1, 0, 0}},
                                 {1, 0, 0, 0, 0})));
    add("mult of (1,1,1,0) in Sp8 (1,1,1,0)", "1",
        istr(weight_multiplicity(GroupDesc::sp(4), DominantWeight{{1, 1, 1, 0}}, {1, 1, 1, 0})));
    add("mult of (1,0,0,0) in Sp8 (1,1,1,0)", "2",
        istr(weight_multiplicity(GroupDesc::sp(4), DominantWeight{{1, 1, 1, 0}}, {1, 0, 0, 0})));
    add("mult of (1,0,0,0) in SO8 (1,1,1,0)", "3",
        istr(weight_multiplicity(GroupDesc::so(8), DominantWeight{{1, 1, 1, 0}}, {1, 0, 0, 0})));

    {
        std::string got;
        for (const auto& [l, c] : cauchy_exterior(2, 3, 3))
            got += l.str() + "x" + c.str() + " ";
        add("second wedge of the 3x3 tensor square", "(2)x(1,1) (1,1)x(2) ", got);
    }
    {
        std::string got;
        for (const auto& [l, c] : cauchy_exterior(4, 3, 3))
            got += l.str() + "x" + c.str() + " ";
        add("fourth wedge of the 3x3 tensor square",
            "(3,1)x(2,1,1) (2,2)x(2,2) (2,1,1)x(3,1) ", got);
    }

    add("Sp branch of the standard module", "(1,0,0)*1 + (0,0,0)*2", [] {
        RepSum s = branch_sp(4, DominantWeight{{1, 0, 0, 0}});
        std::string r;
        for (const auto& [w, m] : s.terms) {
            if (!r.empty()) r += " + ";
            r += w.str() + "*" + std::to_string(m);
        }
        return r;
    }());

    {
        Filtration f = filtration_sl(4, DominantWeight{{3, 2, 1, 0}});
        add("filtration levels of SL4 (3,2,1,0)", "4", std::to_string(f.length()));
        add("first level of SL4 (3,2,1,0)", "(2,1,0)", f.level(1).str());
        add("second level of SL4 (3,2,1,0)", "(3,1,0) + (2,2,0) + (1,0,0)", f.level(2).str());
    }
    {
        Filtration f = filtration_sl(4, DominantWeight{{3, 3, 0, 0}});
        add("first level of SL4 (3,3,0,0)", "(3,0,0)", f.level(1).str());
        add("last level of SL4 (3,3,0,0)", "(3,3,0)", f.level(4).str());
    }
    {
        Filtration f = filtration_sp(4, DominantWeight{{1, 1, 0, 0}});
        add("second-wedge filtration middle", "(1,1,0) + (0,0,0)", f.level(0).str());
        add("second-wedge filtration edge", "(1,0,0)", f.level(1).str());
    }
    {
        Filtration f = filtration_sp(4, DominantWeight{{2, 0, 0, 0}});
        add("symmetric-square filtration middle", "(2,0,0) + (0,0,0)", f.level(0).str());
        add("symmetric-square filtration depth", "2", std::to_string(f.max_index()));
    }
    {
        Filtration f = filtration_sp(4, DominantWeight{{3, 0, 0, 0}});
        add("case-one tail at depth three", "(3,0,0) + (1,0,0)", f.level(0).str());
    }

    add("G2 branch of the 27-dimensional module",
        "(2,2,0)*1 + (2,1,0)*1 + (2,0,0)*1 + (1,1,0)*1 + (1,0,0)*1 + (0,0,0)*1",
        [] {
            RepSum s = branch_g2_sl3(0, 2);
            std::string r;
            for (const auto& [w, m] : s.terms) {
                if (!r.empty()) r += " + ";
                r += w.str() + "*" + std::to_string(m);
            }
            return r;
        }());

    add("restriction of O5 (1,1) plus", "((1,1),empty)*1 + ((1,0),unknown)*1", [] {
        RepSum s = restrict_o(5, DominantWeight{{1, 1}, OLabel::Plus});
        std::string r;
        for (const auto& [w, m] : s.terms) {
            if (!r.empty()) r += " + ";
            r += "(" + DominantWeight{w.entries}.str() + "," + label_name(w.label) + ")*" +
                 std::to_string(m);
        }
        return r;
    }());

    auto cls = [&](const GroupDesc& g, const DominantWeight& w) {
        return classify(g, w).status == RegStatus::E ? std::string("E") : std::string("R");
    };
    add("classify Sp8 (1,1,1,1)", "E", cls(GroupDesc::sp(4), DominantWeight{{1, 1, 1, 1}}));
    add("classify Sp8 (1,1,1,0)", "R", cls(GroupDesc::sp(4), DominantWeight{{1, 1, 1, 0}}));
    add("classify SO6 (1,1,1)", "E", cls(GroupDesc::so(6), DominantWeight{{1, 1, 1}}));
    add("classify SL10 third wedge", "R",
        cls(GroupDesc::sl(10), DominantWeight{{1, 1, 1, 0, 0, 0, 0, 0, 0, 0}}));
    add("classify SL2 (4,0)", "E", cls(GroupDesc::sl(2), DominantWeight{{4, 0}}));

    auto lvl = [&](const LevelCertificate& c) { return std::to_string(c.level); };
    add("level SL3 (5,0,0)", "3", lvl(level_sl(3, DominantWeight{{5, 0, 0}})));
    add("level SL10 third wedge", "10",
        lvl(level_sl(10, DominantWeight{{1, 1, 1, 0, 0, 0, 0, 0, 0, 0}})));
    add("level Sp8 (1,1,1,0)", "8", lvl(level_sp(4, DominantWeight{{1, 1, 1, 0}})));
    add("level Sp10 (1,1,1,1,1)", "10", lvl(level_sp(5, DominantWeight{{1, 1, 1, 1, 1}})));
    add("level Sp8 (3,0,0,0)", "8", lvl(level_sp(4, DominantWeight{{3, 0, 0, 0}})));
    add("level O7 (1,1,1) minus", "7", lvl(level_o(7, DominantWeight{{1, 1, 1}, OLabel::Minus})));
    add("level O5 (2,2) plus", "5", lvl(level_o(5, DominantWeight{{2, 2}, OLabel::Plus})));
    add("level SO8 (2,2,2,2)", "16", lvl(level_so(8, DominantWeight{{2, 2, 2, 2}})));
    add("level SO8 (1,1,1,1)", "16", lvl(level_so(8, DominantWeight{{1, 1, 1, 1}})));
    add("level G2 (0,2)", "7", lvl(level_g2(0, 2)));
    add("level G2 (2,0)", "7", lvl(level_g2(2, 0)));
    add("headline Sp10", "10", std::to_string(headline_level(GroupDesc::sp(5)).level));
    add("headline SO8", "8/16", [] {
        Headline h = headline_level(GroupDesc::so(8));
        return std::to_string(h.level) + "/" + std::to_string(*h.diagonal);
    }());
    add("headline G2", "7", std::to_string(headline_level(GroupDesc::g2()).level));

    auto fr = [](int n, int a) {
        Rat f = min_orbit_F(n, a);
        return f.get_str();
    };
    add("orbit floor F(5,3)", "24", fr(5, 3));
    add("orbit floor F(4,3)", "12", fr(4, 3));
    add("orbit floor F(3,2)", "4", fr(3, 2));
    add("orbit floor F(4,4)", "8", fr(4, 4));
    add("centralizer codim (4,3)", "15", istr(centralizer_codim(4, 3)));
    add("centralizer codim (4,1)", "7", istr(centralizer_codim(4, 1)));
    add("centralizer codim (4,4)", "16", istr(centralizer_codim(4, 4)));
    add("orbit of (1,0,0,0,0)", "10",
        std::to_string(enumerate_orbit({1, 0, 0, 0, 0}).size()));
    add("orbit of (2,1,0)", "24", std::to_string(enumerate_orbit({2, 1, 0}).size()));

    add("orbit verification SO8 (1,1,1,0)", "pass", [] {
        auto r = verify_thm_a1(8, DominantWeight{{1, 1, 1, 0}});
        return r.passed ? std::string("pass") : std::string("fail");
    }());
    add("orbit verification SO6 (2,1,0)", "pass", [] {
        auto r = verify_thm_a1(6, DominantWeight{{2, 1, 0}});
        return r.passed ? std::string("pass") : std::string("fail");
    }());

    add("harmonic wedge dim (4,3)", "48", istr(harmonic_wedge_dim(4, 3)));
    add("harmonic wedge dim (4,4)", "42", istr(harmonic_wedge_dim(4, 4)));
    {
        auto basis = antonyan_basis();
        bool pairs = true;
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i + 1; j < basis.size(); ++j)
                pairs = pairs && check_commuting_criterion(basis[i], basis[j]);
        add("all 21 leading-quadruple pairs share two labels", "true", pairs ? "true" : "false");
        SymplecticConvention conv = SymplecticConvention::shift4();
        bool kernel = contract_lambda(basis[4].value - basis[1].value, conv).is_zero() &&
                      contract_lambda(basis[2].value - basis[1].value, conv).is_zero() &&
                      contract_lambda(basis[0].value, conv).is_zero() &&
                      contract_lambda(basis[3].value, conv).is_zero() &&
                      contract_lambda(basis[5].value, conv).is_zero() &&
                      contract_lambda(basis[6].value, conv).is_zero();
        add("six listed elements are harmonic", "true", kernel ? "true" : "false");
        add("seventh basis element leading quadruple", "(1,7,2,8)",
            "(" + std::to_string(basis[6].first[0]) + "," + std::to_string(basis[6].first[1]) +
                "," + std::to_string(basis[6].first[2]) + "," + std::to_string(basis[6].first[3]) +
                ")");
    }
    add("stabilizer generator report", "pass", [] {
        auto r = verify_stabilizer_generators();
        return r.passed ? std::string("pass") : std::string("fail");
    }());
    return out;
}

inline std::string headline_table_text() {
    std::string t;
    t += "Group                     Level of stable rationality\n";
    t += "SL_n (n >= 1)             n\n";
    t += "SO_{2n+1} (n >= 2)        2n+1\n";
    t += "O_{2n+1} (n >= 2)         2n+1\n";
    t += "Sp_{2n} (n >= 4)          2n\n";
    t += "SO_{2n} (n >= 2)          2n (4n for the diagonal weights c*w_{n-1}, c*w_n)\n";
    t += "O_{2n} (n >= 2)           2n\n";
    t += "G_2                       7\n";
    return t;
}

inline std::string orbit_floor_table_text() {
    std::string t;
    t += "F(n,a)  a=1  a=2  a=3  a=4  a=5\n";
    for (int n = 5; n >= 3; --n) {
        t += "n=" + std::to_string(n) + "    ";
        for (int a = 1; a <= n; ++a) {
            std::string v = min_orbit_F(n, a).get_str();
            t += "  " + v + std::string(v.size() < 3 ? 3 - v.size() : 0, ' ');
        }
        t += "\n";
    }
    return t;
}

}  // namespace detail

/// Parse and execute one invocation. Output is deterministic: fixed
/// ordering, no timestamps.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact certifier for levels of stable rationality of representation quotients"};
    app.require_subcommand(1);

    std::string group_name, weight_str, label_str, format = "text", verify_what;
    int size = 0, orbit_k = 1, max_entries = 3, max_rank = 6;
    bool json = false;
    std::string orbit_mode = "size";

    auto add_common = [&](CLI::App* cmd, bool needs_group) {
        if (needs_group) {
            cmd->add_option("--group", group_name, "group family: sl, sp, so, o, g2")->required();
            cmd->add_option("--n", size, "group size (n for sl/sp, N for so/o)");
        }
        cmd->add_option("--weight", weight_str, "comma-separated weight entries");
        cmd->add_option("--label", label_str, "orthogonal extension label: plus, minus, empty");
        cmd->add_flag("--json", json, "emit JSON");
        cmd->add_option("--format", format, "text (default) or json");
    };

    CLI::App* dim = app.add_subcommand("dim", "exact dimension of an irreducible");
    add_common(dim, true);
    CLI::App* branch = app.add_subcommand("branch", "branching law for the group family");
    add_common(branch, true);
    CLI::App* filt = app.add_subcommand("filtration", "parabolic restriction filtration");
    add_common(filt, true);
    CLI::App* cls = app.add_subcommand("classify", "exceptional/regular status");
    add_common(cls, true);
    CLI::App* level = app.add_subcommand("level", "level-of-stable-rationality certificate");
    add_common(level, true);
    CLI::App* orbit = app.add_subcommand("orbit", "signed-permutation orbit data");
    add_common(orbit, false);
    orbit->add_option("--k", orbit_k, "number of flipped signs");
    orbit->add_option("--mode", orbit_mode, "size, fixed, or enumerate");
    CLI::App* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("what", verify_what, "appendix-a or harmonic")->required();
    verify->add_option("--max-entries", max_entries, "entry bound for the sweep");
    verify->add_option("--max-rank", max_rank, "rank bound for the sweep");
    verify->add_flag("--json", json, "emit JSON");
    CLI::App* table = app.add_subcommand("table", "headline level table and orbit floor table");
    table->add_flag("--json", json, "emit JSON");
    CLI::App* selftest = app.add_subcommand("selftest", "re-evaluate every golden value");
    selftest->add_flag("--json", json, "emit JSON");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (format == "json") json = true;

    try {
        if (dim->parsed() || branch->parsed() || filt->parsed() || cls->parsed() ||
            level->parsed()) {
            GroupDesc g = detail::parse_group(group_name, size);
            DominantWeight w{detail::parse_weight(weight_str), detail::parse_label(label_str)};
            if (g.family == Family::SL) {
                DominantWeight c = canonical_sl(w);
                if (c.entries != w.entries) w = c;  // canonical form is echoed in all output
            }
            if (dim->parsed()) {
                out << to_string(irrep_dim(g, w)) << "\n";
                return kExitOk;
            }
            if (branch->parsed()) {
                RepSum s;
                switch (g.family) {
                    case Family::SL: s = branch_sl(g.size, w); break;
                    case Family::Sp: s = branch_sp(g.size, w); break;
                    case Family::SOodd: s = branch_so_odd(g.rank(), w); break;
                    case Family::SOeven: s = branch_so_even(g.rank(), w); break;
                    case Family::Ofull: s = restrict_o(g.size, w); break;
                    case Family::G2: s = branch_g2_sl3(w.entries.at(0), w.entries.at(1)); break;
                }
                if (json) {
                    out << to_json(s).dump(2) << "\n";
                } else {
                    for (const auto& [t, m] : s.terms)
                        out << t.str() << (t.label != OLabel::None ? " [" + label_name(t.label) + "]"
                                                                   : "")
                            << " x " << m << "\n";
                }
                return kExitOk;
            }
            if (filt->parsed()) {
                Filtration f;
                if (g.family == Family::SL)
                    f = filtration_sl(g.size, w);
                else if (g.family == Family::Sp)
                    f = filtration_sp(g.size, w);
                else
                    throw Unsupported("filtration: only the linear and symplectic families");
                if (json) {
                    out << to_json(f).dump(2) << "\n";
                } else {
                    for (int i = f.min_index(); i <= f.max_index(); ++i)
                        out << "Q_" << i << ": " << f.level(i).str() << "\n";
                }
                return kExitOk;
            }
            if (cls->parsed()) {
                Classification c = classify(g, w);
                out << (c.status == RegStatus::E ? "E" : "R") << " (" << c.source << ")\n";
                return kExitOk;
            }
            LevelCertificate c = certify(g, w);
            verify_certificate(c);
            if (json) {
                out << to_json(c).dump(2) << "\n";
            } else {
                out << g.name() << " " << w.str() << ": level " << c.level << "\n";
                for (const auto& s : c.steps) {
                    out << "  [" << s.rule << "] " << s.citation << "\n";
                    for (const auto& ch : s.checks)
                        out << "    " << ch.name << ": " << to_string(ch.lhs) << " " << ch.op << " "
                            << to_string(ch.rhs) << (ch.holds ? "  ok" : "  FAIL") << "\n";
                }
            }
            return kExitOk;
        }
        if (orbit->parsed()) {
            std::vector<int> chi = detail::parse_weight(weight_str);
            if (orbit_mode == "enumerate") {
                auto orb = enumerate_orbit(chi);
                for (const auto& v : orb) out << DominantWeight{v}.str() << "\n";
                return kExitOk;
            }
            WeightShape shape = WeightShape::of(chi);
            if (orbit_mode == "fixed") {
                out << to_string(fixed_count(shape, orbit_k)) << "\n";
                return kExitOk;
            }
            out << to_string(orbit_size(shape)) << "\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            if (verify_what == "harmonic") {
                auto repharm = verify_stabilizer_generators();
                if (json)
                    out << to_json(repharm).dump(2) << "\n";
                else {
                    for (const auto& s : repharm.steps) {
                        out << "[" << s.rule << "]\n";
                        for (const auto& ch : s.checks)
                            out << "  " << ch.name << (ch.holds ? "  ok" : "  FAIL") << "\n";
                    }
                    out << (repharm.passed ? "harmonic checks passed" : "harmonic checks FAILED")
                        << "\n";
                }
                return repharm.passed ? kExitOk : kExitFailedCheck;
            }
            if (verify_what != "appendix-a")
                throw Unsupported("verify: expected 'appendix-a' or 'harmonic'");
            long total = 0;
            for (int n = 2; n <= max_rank; ++n) {
                GroupDesc so = GroupDesc::so(2 * n);
                for (const auto& w : enumerate_dominant(so, max_entries)) {
                    if (w.entries.back() != 0) continue;
                    if (!is_regular(so, w)) continue;
                    auto r = verify_thm_a1(2 * n, w);
                    ++total;
                    out << so.name() << " " << w.str() << ": "
                        << (r.passed ? "verified" : "FAILED") << "\n";
                }
            }
            out << "verified " << total << " weights\n";
            return kExitOk;
        }
        if (table->parsed()) {
            out << detail::headline_table_text() << "\n" << detail::orbit_floor_table_text();
            return kExitOk;
        }
        // selftest
        auto results = detail::selftest_results();
        bool all = true;
        if (json) {
            OrderedJson arr = OrderedJson::array();
            for (const auto& r : results) {
                OrderedJson j;
                j["name"] = r.name;
                j["expected"] = r.expected;
                j["got"] = r.got;
                j["pass"] = r.expected == r.got;
                all = all && r.expected == r.got;
                arr.push_back(std::move(j));
            }
            out << arr.dump(2) << "\n";
        } else {
            for (const auto& r : results) {
                bool ok = r.expected == r.got;
                all = all && ok;
                out << (ok ? "ok   " : "FAIL ") << r.name << ": " << r.got;
                if (!ok) out << " (expected " << r.expected << ")";
                out << "\n";
            }
        }
        return all ? kExitOk : kExitFailedCheck;
    } catch (const CertificationFailed& e) {
        err << "certification failed: " << e.what() << "\n";
        return kExitFailedCheck;
    } catch (const VerificationFailed& e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitFailedCheck;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace lielevel::cli
