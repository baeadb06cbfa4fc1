#include "schubert/report.hpp"

#include <sstream>

namespace schubert {

AnalyzeData analyze(const SchubertInput& in) {
    AnalyzeData data;
    data.input = in;
    data.strata = stratum_invariants(in);
    data.pairs = pair_invariants(in);
    data.smallness = resolution_smallness(in);
    data.ih = ih_recursion(in);
    for (int p = 1; p <= in.strata(); ++p) data.summands.push_back(summand_table(in, p));
    data.perverse = perverse_table(in);
    for (const auto& pi : data.pairs.pairs)
        data.stalks.emplace(std::make_pair(pi.p, pi.q), stalk_table(in, pi.p, pi.q));
    data.checks = input_checks(in);
    return data;
}

nlohmann::ordered_json poly_to_json(const LaurentPoly& p) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back({e, c.convert_to<long long>()});
    return out;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    LaurentPoly out;
    for (const auto& pair : j)
        out += LaurentPoly::monomial(pair.at(0).get<int>(), Int(pair.at(1).get<long long>()));
    return out;
}

nlohmann::ordered_json to_json(const AnalyzeData& data) {
    using json = nlohmann::ordered_json;
    const SchubertInput& in = data.input;

    json root;
    root["schema"] = kReportSchema;
    root["input"] = {{"i", in.i}, {"j", in.j}, {"k", in.k}, {"l", in.l},
                     {"r", in.r}, {"c", in.c}, {"regime", regime_name(in.regime)}};

    json strata = json::array();
    for (const auto& s : data.strata.strata)
        strata.push_back({{"p", s.p}, {"i_p", s.i_p}, {"m_p", s.m_p}});
    root["strata"] = strata;
    root["n"] = data.strata.n;

    json pairs = json::array();
    for (const auto& pi : data.pairs.pairs) {
        long long gap = data.strata.m(pi.p) - data.strata.m(pi.q);
        pairs.push_back({{"p", pi.p},
                         {"q", pi.q},
                         {"k", pi.k_pq},
                         {"d", pi.d_pq},
                         {"delta", pi.delta_pq},
                         {"kbar", pi.kbar_pq},
                         {"xi_small", pi.kbar_pq < gap - pi.kbar_pq},
                         {"pi_small", pi.delta_pq < 0}});
    }
    root["pairs"] = pairs;

    json ih;
    for (int p = 1; p <= in.strata(); ++p) ih[std::to_string(p)] = poly_to_json(data.ih.ih(p));
    root["ih"] = ih;

    json summands;
    for (const auto& table : data.summands) {
        json list = json::array();
        for (const auto& entry : table.entries) {
            json mults;
            for (const auto& [shift, mult] : entry.mults) mults[std::to_string(shift)] = mult;
            list.push_back({{"q", entry.q}, {"mults", mults}});
        }
        summands[std::to_string(table.p)] = list;
    }
    root["summands"] = summands;

    json perverse;
    for (const auto& [shift, list] : data.perverse) {
        json entries = json::array();
        for (const auto& e : list) {
            if (e.ic_top)
                entries.push_back({"IC_S", e.mult});
            else
                entries.push_back({e.q, e.mult});
        }
        perverse[std::to_string(shift)] = entries;
    }
    root["perverse"] = perverse;

    json stalks;
    for (const auto& [pq, poly] : data.stalks)
        stalks[std::to_string(pq.first) + "," + std::to_string(pq.second)] = poly_to_json(poly);
    root["stalks"] = stalks;

    json checks;
    for (const auto& check : data.checks) checks[check.name] = check.pass ? "pass" : "fail";
    root["checks"] = checks;
    return root;
}

namespace {

std::string perverse_entry_text(const PerverseEntry& e) {
    std::ostringstream out;
    if (e.ic_top)
        out << "IC(S)";
    else
        out << "IC(Delta_" << e.q << ")";
    if (e.mult != 1) out << " x " << e.mult;
    return out.str();
}

}  // namespace

std::string to_text(const AnalyzeData& data) {
    const SchubertInput& in = data.input;
    std::ostringstream out;
    out << "input: i=" << in.i << " j=" << in.j << " k=" << in.k << " l=" << in.l
        << "  r=" << in.r << " c=" << in.c << "  regime=" << regime_name(in.regime) << "\n\n";

    out << "strata (p, i_p, m_p):\n";
    for (const auto& s : data.strata.strata)
        out << "  p=" << s.p << "  i_p=" << s.i_p << "  m_p=" << s.m_p << "\n";
    out << "  n=" << data.strata.n << "\n\n";

    out << "pairs (p,q): k d delta kbar xi_small pi_small\n";
    for (const auto& pi : data.pairs.pairs) {
        long long gap = data.strata.m(pi.p) - data.strata.m(pi.q);
        out << "  (" << pi.p << "," << pi.q << "): " << pi.k_pq << " " << pi.d_pq << " "
            << pi.delta_pq << " " << pi.kbar_pq << " "
            << (pi.kbar_pq < gap - pi.kbar_pq ? "yes" : "no") << " "
            << (pi.delta_pq < 0 ? "yes" : "no") << "\n";
    }
    out << "\nintersection cohomology:\n";
    for (int p = 1; p <= in.strata(); ++p)
        out << "  I_" << p << " = " << data.ih.ih(p).str() << "\n";
    out << "\nsummands of the pushforward (per stratum):\n";
    for (const auto& table : data.summands) {
        out << "  p=" << table.p << ": IC(Delta_" << table.p << ")";
        for (const auto& entry : table.entries)
            for (const auto& [shift, mult] : entry.mults)
                out << " + IC(Delta_" << entry.q << ")[" << -shift << "]"
                    << (mult != 1 ? " x " + std::to_string(mult) : "");
        out << "\n";
    }
    out << "\nperverse summands (full resolution):\n";
    for (const auto& [shift, list] : data.perverse) {
        out << "  i=" << (shift > 0 ? "+" : "") << shift << ": ";
        for (size_t idx = 0; idx < list.size(); ++idx) {
            if (idx) out << ", ";
            out << perverse_entry_text(list[idx]);
        }
        out << "\n";
    }
    out << "\nIC stalks along open strata:\n";
    for (const auto& [pq, poly] : data.stalks)
        out << "  (p,q)=(" << pq.first << "," << pq.second << "): " << poly.str() << "\n";
    out << "\nchecks:\n";
    for (const auto& check : data.checks)
        out << "  " << check.name << ": " << (check.pass ? "pass" : "fail")
            << (check.detail.empty() ? "" : " (" + check.detail + ")") << "\n";
    return out.str();
}

std::string to_latex(const AnalyzeData& data) {
    const SchubertInput& in = data.input;
    std::ostringstream out;
    out << "% schema " << kReportSchema << "\n";
    out << "\\begin{tabular}{rrrrrrl}\n"
        << "$i$ & $j$ & $k$ & $l$ & $r$ & $c$ & regime \\\\\n"
        << in.i << " & " << in.j << " & " << in.k << " & " << in.l << " & " << in.r << " & "
        << in.c << " & " << regime_name(in.regime) << " \\\\\n"
        << "\\end{tabular}\n\n";

    out << "\\begin{tabular}{rrr}\n$p$ & $i_p$ & $m_p$ \\\\\n";
    for (const auto& s : data.strata.strata)
        out << s.p << " & " << s.i_p << " & " << s.m_p << " \\\\\n";
    out << "\\end{tabular}\n\n";

    out << "\\begin{tabular}{rrrrrr}\n$p$ & $q$ & $k_{pq}$ & $d_{pq}$ & $\\delta_{pq}$ & "
           "$\\overline{k}_{pq}$ \\\\\n";
    for (const auto& pi : data.pairs.pairs)
        out << pi.p << " & " << pi.q << " & " << pi.k_pq << " & " << pi.d_pq << " & "
            << pi.delta_pq << " & " << pi.kbar_pq << " \\\\\n";
    out << "\\end{tabular}\n\n";

    // one row of even-degree coefficients per stratum
    long long top = data.strata.n;
    out << "\\begin{tabular}{r|" << std::string(static_cast<size_t>(top) + 1, 'r') << "}\n";
    out << "$p$";
    for (long long d = 0; d <= top; ++d) out << " & $t^{" << 2 * d << "}$";
    out << " \\\\\n\\hline\n";
    for (int p = 1; p <= in.strata(); ++p) {
        out << p;
        for (long long d = 0; d <= top; ++d)
            out << " & " << data.ih.ih(p).coeff(static_cast<int>(2 * d));
        out << " \\\\\n";
    }
    out << "\\end{tabular}\n\n";

    out << "\\begin{tabular}{rrl}\n$p$ & $q$ & multiplicities \\\\\n";
    for (const auto& table : data.summands) {
        for (const auto& entry : table.entries) {
            out << table.p << " & " << entry.q << " & ";
            if (entry.mults.empty()) out << "---";
            bool first = true;
            for (const auto& [shift, mult] : entry.mults) {
                if (!first) out << ", ";
                out << "$[" << shift << "]\\,{\\times}\\," << mult << "$";
                first = false;
            }
            out << " \\\\\n";
        }
    }
    out << "\\end{tabular}\n\n";

    out << "\\begin{tabular}{rl}\n$i$ & summands \\\\\n";
    for (const auto& [shift, list] : data.perverse) {
        out << shift << " & ";
        for (size_t idx = 0; idx < list.size(); ++idx) {
            if (idx) out << " $\\oplus$ ";
            if (list[idx].ic_top)
                out << "$IC_{S}$";
            else
                out << "$IC_{\\Delta_" << list[idx].q << "}$";
            if (list[idx].mult != 1) out << "$^{\\oplus " << list[idx].mult << "}$";
        }
        out << " \\\\\n";
    }
    out << "\\end{tabular}\n\n";

    out << "\\begin{tabular}{rl}\npair & stalk \\\\\n";
    for (const auto& [pq, poly] : data.stalks)
        out << "(" << pq.first << "," << pq.second << ") & $" << poly.str() << "$ \\\\\n";
    out << "\\end{tabular}\n\n";

    out << "\\begin{tabular}{lr}\ncheck & status \\\\\n";
    for (const auto& check : data.checks)
        out << check.name << " & " << (check.pass ? "pass" : "fail") << " \\\\\n";
    out << "\\end{tabular}\n";
    return out.str();
}

}  // namespace schubert
