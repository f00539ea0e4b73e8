#include "geowron/json_io.hpp"

namespace gwron {

Json word_to_json(const Word& w) { return Json(w.alpha()); }

Json wordset_words_json(const WordSet& ws) {
    Json words = Json::array();
    for (const Word& w : ws.words()) words.push_back(word_to_json(w));
    return words;
}

Json wordset_to_json(const WordSet& ws) {
    Json stats;
    stats["m"] = ws.size();
    stats["k"] = ws.order();
    stats["w"] = ws.weight();
    stats["beta"] = ws.beta();
    stats["charseq"] = ws.charseq().n;
    Json out;
    out["words"] = wordset_words_json(ws);
    out["stats"] = std::move(stats);
    return out;
}

Json diffpoly_to_json(const DiffPoly& d) {
    Json out = Json::array();
    for (const auto& [m, c] : d.terms()) {
        Json term;
        term["coeff"] = to_string(c);
        Json factors = Json::array();
        for (const auto& f : m) {
            Json fx;
            fx["j"] = f.var.fn;
            fx["alpha"] = f.var.alpha;
            fx["power"] = f.power;
            factors.push_back(std::move(fx));
        }
        term["factors"] = std::move(factors);
        out.push_back(std::move(term));
    }
    return out;
}

Json combination_to_json(const WronskianCombination& w) {
    Json out;
    out["m"] = w.size();
    Json terms = Json::array();
    for (const auto& t : w.terms()) {
        Json jt;
        jt["coeff"] = to_string(t.coeff);
        jt["set"] = wordset_words_json(t.set);
        terms.push_back(std::move(jt));
    }
    out["terms"] = std::move(terms);
    return out;
}

Json certify_report_to_json(const CertifyReport& r) {
    Json out;
    out["p"] = r.p;
    out["m"] = r.m;
    out["variant"] = r.variant == VandermondeVariant::plain ? "A" : "B";
    out["seed"] = r.seed;
    out["sets_checked"] = r.sets_checked;
    Json conv = Json::array();
    for (const auto& c : r.converse) {
        Json jc;
        jc["pattern"] = c.pattern;
        jc["all_vanish"] = c.all_vanish;
        conv.push_back(std::move(jc));
    }
    out["converse"] = std::move(conv);
    out["converse_ok"] = r.converse_ok;
    Json fwd = Json::array();
    for (const auto& s : r.forward) {
        Json js;
        Json cols = Json::array();
        for (const auto& col : s.columns) {
            Json jcol = Json::array();
            for (const auto& x : col) jcol.push_back(to_string(x));
            cols.push_back(std::move(jcol));
        }
        js["columns"] = std::move(cols);
        js["witness"] = s.witness;
        fwd.push_back(std::move(js));
    }
    out["forward"] = std::move(fwd);
    out["forward_failures"] = r.forward_failures;
    out["refuted"] = r.refuted();
    return out;
}

Word word_from_json(const Json& j, int p) {
    if (!j.is_array() || j.empty()) throw error("a word must be a nonempty array");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw error("word entries must be integers");
        v.push_back(x.get<int>());
    }
    if ((int)v.size() == p) return Word(std::move(v));
    return Word::from_letters(v, p);
}

WordSet wordset_from_json(const Json& j, int p) {
    if (!j.is_array() || j.empty()) throw error("a word set must be a nonempty array of words");
    std::vector<Word> words;
    for (const auto& w : j) words.push_back(word_from_json(w, p));
    return WordSet(std::move(words));
}

WronskianCombination combination_from_json(const Json& j, int p) {
    if (!j.contains("terms")) throw error("combination JSON needs a terms array");
    std::vector<WronskianCombination::Term> terms;
    for (const auto& t : j["terms"]) {
        Rational c = parse_rational(t.at("coeff").get<std::string>());
        terms.push_back({std::move(c), wordset_from_json(t.at("set"), p)});
    }
    return WronskianCombination(std::move(terms));
}

}  // namespace gwron
