/*
   Copyright 2026 The z4ucyclic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "z4u/specformat.hpp"

#include <algorithm>
#include <cctype>

#include "z4u/errors.hpp"

namespace z4u {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

// "x^2+x+1" -> F2Poly; accepts 0 and 1 and bare x
F2Poly parse_f2_poly(const std::string& text) {
    if (text.empty()) throw bad_input("empty polynomial in ideal descriptor");
    std::vector<std::uint8_t> coeffs;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find('+', pos);
        if (next == std::string::npos) next = text.size();
        std::string term = text.substr(pos, next - pos);
        pos = next + 1;
        int deg;
        if (term == "0") continue;
        if (term == "1")
            deg = 0;
        else if (term == "x")
            deg = 1;
        else if (term.rfind("x^", 0) == 0)
            deg = std::stoi(term.substr(2));
        else
            throw bad_input("cannot parse polynomial term '" + term + "'");
        if (deg >= static_cast<int>(coeffs.size())) coeffs.resize(deg + 1, 0);
        coeffs[deg] ^= 1;
    }
    return F2Poly(std::move(coeffs));
}

// "u^3" -> 3, "u" -> 1, "1" -> 0; prefix "2" handled by the caller
int parse_u_power(const std::string& text) {
    if (text == "1") return 0;
    if (text == "u") return 1;
    if (text.rfind("u^", 0) == 0) return std::stoi(text.substr(2));
    throw bad_input("cannot parse chain power '" + text + "'");
}

struct TwistedGen {
    int i;
    int t;
    ChainEl h;  // empty field when absent
    bool has_twist;
};

// "u^i" or "u^i+2u^t*(h)"
TwistedGen parse_twisted(const std::string& text, const FieldPtr& field, int k) {
    TwistedGen g{0, 0, ChainEl(), false};
    std::size_t plus = text.find('+');
    if (plus == std::string::npos) {
        g.i = parse_u_power(text);
        return g;
    }
    g.i = parse_u_power(text.substr(0, plus));
    std::string twist = text.substr(plus + 1);
    if (twist.empty() || twist[0] != '2') throw bad_input("twist must start with 2: '" + twist + "'");
    twist = twist.substr(1);
    std::size_t star = twist.find("*(");
    std::string upart, hpart;
    if (star != std::string::npos) {
        if (twist.back() != ')') throw bad_input("unbalanced parentheses in ideal descriptor");
        upart = twist.substr(0, star);
        hpart = twist.substr(star + 2, twist.size() - star - 3);
    } else {
        // allow the compact forms 2u^t, 2x^2u^2 and 2(x^2+1)u^2: split at the last 'u'
        std::size_t upos = twist.rfind('u');
        if (upos == std::string::npos) {
            upart = "";
            hpart = twist.empty() ? "1" : twist;
        } else {
            upart = twist.substr(upos);
            hpart = twist.substr(0, upos);
            if (hpart.empty()) hpart = "1";
        }
        if (hpart.size() >= 2 && hpart.front() == '(' && hpart.back() == ')')
            hpart = hpart.substr(1, hpart.size() - 2);
    }
    g.t = upart.empty() ? 0 : parse_u_power(upart);
    std::vector<F2Poly> coeffs;
    std::size_t pos = 0;
    while (pos <= hpart.size()) {
        std::size_t comma = hpart.find(',', pos);
        if (comma == std::string::npos) comma = hpart.size();
        coeffs.push_back(parse_f2_poly(hpart.substr(pos, comma - pos)));
        pos = comma + 1;
        if (comma == hpart.size()) break;
    }
    while (static_cast<int>(coeffs.size()) < k) coeffs.push_back(F2Poly::zero());
    g.h = ChainEl(field, std::move(coeffs));
    g.has_twist = true;
    return g;
}

IdealSpec classify_single(const TwistedGen& g, const FieldPtr& field, int k) {
    if (!g.has_twist) return IdealSpec::case_I(field, k, g.i);
    if (g.t >= 2 * g.i - k) return IdealSpec::case_III(k, g.i, g.t, g.h);
    return IdealSpec::case_IV(k, g.i, g.t, g.h);
}

}  // namespace

IdealSpec parse_ideal_term(const std::string& raw, const FieldPtr& field, int k) {
    std::string text = strip(raw);
    if (!text.empty() && text.front() == '<') text = text.substr(1);
    if (!text.empty() && text.back() == '>') text.pop_back();
    if (text.empty()) throw bad_input("empty ideal descriptor");
    try {
        if (text == "0") return IdealSpec::zero_ideal(field, k);
        // strip one wrapping pair of parentheses, if any
        if (text.front() == '(' && text.back() == ')') {
            int depth = 0;
            bool wraps = true;
            for (std::size_t p = 0; p + 1 < text.size(); ++p) {
                if (text[p] == '(') ++depth;
                if (text[p] == ')') --depth;
                if (depth == 0) wraps = false;
            }
            if (wraps) text = text.substr(1, text.size() - 2);
        }
        // a top-level comma separates the two generators
        int depth = 0;
        std::size_t cut = std::string::npos;
        for (std::size_t p = 0; p < text.size(); ++p) {
            if (text[p] == '(') ++depth;
            if (text[p] == ')') --depth;
            if (text[p] == ',' && depth == 0) cut = p;
        }
        if (cut != std::string::npos) {
            TwistedGen g = parse_twisted(text.substr(0, cut), field, k);
            std::string second = text.substr(cut + 1);
            if (second.empty() || second[0] != '2') throw bad_input("second generator must be 2u^s");
            int s = second == "2" ? 0 : parse_u_power(second.substr(1));
            if (!g.has_twist) return IdealSpec::case_V(field, k, g.i, s);
            return IdealSpec::case_VI(k, g.i, s, g.t, g.h);
        }
        if (text[0] == '2') {
            int s = text == "2" ? 0 : parse_u_power(text.substr(1));
            return IdealSpec::case_II(field, k, s);
        }
        return classify_single(parse_twisted(text, field, k), field, k);
    } catch (const std::invalid_argument&) {
        throw bad_input("malformed ideal descriptor '" + raw + "'");
    } catch (const std::out_of_range&) {
        throw bad_input("malformed ideal descriptor '" + raw + "'");
    }
}

std::vector<IdealSpec> parse_spec_list(const std::string& text, const FactorSystem& system, int k) {
    std::vector<std::string> terms;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t semi = text.find(';', pos);
        if (semi == std::string::npos) semi = text.size();
        terms.push_back(text.substr(pos, semi - pos));
        pos = semi + 1;
        if (semi == text.size()) break;
    }
    if (static_cast<int>(terms.size()) != system.r())
        throw bad_input("expected " + std::to_string(system.r()) + " ideal terms, got " +
                        std::to_string(terms.size()));
    std::vector<IdealSpec> specs;
    for (int j = 0; j < system.r(); ++j)
        specs.push_back(parse_ideal_term(terms[j], system.factor(j).ring->field, k));
    return specs;
}

/* ------------------------------------------------------------------ JSON */

nlohmann::json poly_to_json(const Z4Poly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (auto c : p.coeffs()) a.push_back(static_cast<int>(c));
    return a;
}

nlohmann::json poly_to_json(const F2Poly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (auto c : p.coeffs()) a.push_back(static_cast<int>(c));
    return a;
}

nlohmann::json spec_to_json(const IdealSpec& spec) {
    nlohmann::json h = nlohmann::json::array();
    for (int l = 0; l < spec.h_quotient_length(); ++l) h.push_back(poly_to_json(spec.h().u_coeff(l)));
    return {{"case", to_string(spec.kase())}, {"i", spec.i()},          {"s", spec.s()},
            {"t", spec.t()},                  {"h", h},                 {"d", spec.d()},
            {"k", spec.k()},                  {"ideal", spec.to_string()}};
}

nlohmann::json mixed_to_json(const MixedEl& e) {
    nlohmann::json a = nlohmann::json::array();
    for (int l = 0; l < e.chain_length(); ++l) a.push_back(poly_to_json(e.u_coeff(l)));
    return a;
}

nlohmann::json factor_system_to_json(const FactorSystem& system) {
    nlohmann::json factors = nlohmann::json::array();
    for (int j = 0; j < system.r(); ++j) {
        const auto& fi = system.factor(j);
        factors.push_back({{"f", poly_to_json(fi.f)},
                           {"f_mod2", poly_to_json(fi.fbar)},
                           {"degree", fi.d},
                           {"idempotent", poly_to_json(fi.e)},
                           {"delta", fi.delta},
                           {"sigma", system.sigma(j) + 1}});
    }
    return {{"n", system.n()},
            {"r", system.r()},
            {"lambda", system.lambda()},
            {"epsilon", system.epsilon()},
            {"factors", factors}};
}

nlohmann::json code_to_json(const CyclicCode& code) {
    nlohmann::json specs = nlohmann::json::array();
    for (const auto& s : code.specs) specs.push_back(spec_to_json(s));
    return {{"n", code.system->n()}, {"k", code.k}, {"log2_size", code.log2_size()}, {"specs", specs}};
}

nlohmann::json matrix_to_json(const Z4Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.rows; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(static_cast<int>(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

std::string codeword_csv_row(const CodeElement& w) {
    std::string s;
    for (int l = 0; l < w.k(); ++l)
        for (int i = 0; i < w.n(); ++i) {
            if (!s.empty()) s += ",";
            s += std::to_string(w.at(i, l));
        }
    return s;
}

std::string matrix_to_csv(const Z4Matrix& m) {
    std::string s;
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) s += ",";
            s += std::to_string(m.at(r, c));
        }
        s += "\n";
    }
    return s;
}

}  // namespace z4u
