#include "lsa/model.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace lsa {

namespace {

std::string lowercase(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

std::size_t common_prefix(std::string_view a, std::string_view b) {
    std::size_t n = 0;
    while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
    return n;
}

std::vector<std::string> prefix_candidates(const Vocabulary& vocab, std::string_view term) {
    std::size_t best = 0;
    for (const auto& t : vocab.terms) best = std::max(best, common_prefix(t, term));
    std::vector<std::string> out;
    if (best == 0) return out;
    for (const auto& t : vocab.terms)
        if (common_prefix(t, term) == best) out.push_back(t);
    return out;
}

std::string describe_unknown(const std::string& term, const std::vector<std::string>& candidates) {
    std::string msg = "term not in vocabulary: '" + term + "'";
    if (!candidates.empty()) {
        msg += "; nearest: ";
        for (std::size_t i = 0; i < candidates.size(); ++i) msg += (i ? ", " : "") + candidates[i];
    }
    return msg;
}

std::size_t require_term(const LsaModel& model, const std::string& term) {
    const auto row = model.matrix().terms.index_of(term);
    if (row == Vocabulary::npos)
        throw UnknownTermError(term, prefix_candidates(model.matrix().terms, term));
    return row;
}

std::string format_score(double score) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << score;
    std::string text = s.str();
    // -0.000000 and 0.000000 are the same score on the wire.
    if (text.find_first_not_of("-0.") == std::string::npos) return "0.000000";
    return text;
}

}  // namespace

LabeledMatrix to_labeled(const TermDocMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0)
        throw std::invalid_argument("term-document matrix is empty (" + std::to_string(m.rows()) +
                                    "x" + std::to_string(m.cols()) + ")");
    std::vector<double> values(m.counts.begin(), m.counts.end());
    return {m.terms.terms, m.doc_ids, DenseMatrix(m.rows(), m.cols(), std::move(values))};
}

LsaModel fit(TermDocMatrix matrix) {
    auto labeled = to_labeled(matrix);
    auto factors = svd(labeled.values);
    return LsaModel(std::move(matrix), std::move(factors));
}

LabeledMatrix reconstruct_at_rank(const LsaModel& model, std::size_t k) {
    const auto& m = model.matrix();
    return {m.terms.terms, m.doc_ids, reconstruct(truncate(model.factors(), k))};
}

UnknownTermError::UnknownTermError(std::string term, std::vector<std::string> candidates)
    : std::invalid_argument(describe_unknown(term, candidates)),
      term_(std::move(term)),
      candidates_(std::move(candidates)) {}

std::vector<RankedResult> keyword_search(const LsaModel& model, std::string_view keyword,
                                         Rank rank, const SearchOptions& options) {
    const auto& m = model.matrix();
    const std::size_t row = require_term(model, lowercase(keyword));

    std::vector<double> scores(m.cols());
    if (rank.is_full()) {
        for (std::size_t d = 0; d < m.cols(); ++d) scores[d] = static_cast<double>(m.at(row, d));
    } else {
        auto approx = reconstruct_at_rank(model, rank.k());
        for (std::size_t d = 0; d < m.cols(); ++d) scores[d] = approx.values(row, d);
    }

    std::vector<std::size_t> order;
    for (std::size_t d = 0; d < m.cols(); ++d)
        if (scores[d] > options.threshold) order.push_back(d);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    if (options.limit && order.size() > *options.limit) order.resize(*options.limit);

    std::vector<RankedResult> results;
    results.reserve(order.size());
    for (auto d : order) results.push_back({m.doc_ids[d], scores[d]});
    return results;
}

double average_precision(std::span<const RankedResult> ranked,
                         const std::set<std::string>& relevant) {
    if (ranked.empty() || relevant.empty()) return 0.0;
    double sum = 0.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        if (!relevant.count(ranked[i].doc_id)) continue;
        ++hits;
        sum += static_cast<double>(hits) / static_cast<double>(i + 1);
    }
    return sum / static_cast<double>(relevant.size());
}

double r_precision(std::span<const RankedResult> ranked, const std::set<std::string>& relevant) {
    if (relevant.empty()) return 0.0;
    const std::size_t cutoff = std::min(ranked.size(), relevant.size());
    std::size_t hits = 0;
    for (std::size_t i = 0; i < cutoff; ++i) hits += relevant.count(ranked[i].doc_id);
    return static_cast<double>(hits) / static_cast<double>(relevant.size());
}

SweepReport sweep_ranks(const LsaModel& model, const Judgments& judgments,
                        std::vector<std::size_t> ks, double threshold) {
    if (ks.empty()) throw std::invalid_argument("sweep: no ranks given");
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    if (ks.front() < 1 || ks.back() > model.factor_count())
        throw std::out_of_range("sweep: ranks must lie in [1, " +
                                std::to_string(model.factor_count()) + "]");

    const auto& doc_ids = model.matrix().doc_ids;
    for (const auto& [keyword, relevant] : judgments) {
        require_term(model, lowercase(keyword));
        for (const auto& id : relevant)
            if (std::find(doc_ids.begin(), doc_ids.end(), id) == doc_ids.end())
                throw std::invalid_argument("sweep: unknown document id '" + id +
                                            "' in judgments for '" + keyword + "'");
    }

    SweepReport report;
    for (auto k : ks) {
        RankReport rr{k, {}};
        for (const auto& [keyword, relevant] : judgments) {
            auto results = keyword_search(model, keyword, Rank::of(k), {threshold, std::nullopt});
            const double ap = average_precision(results, relevant);
            const double rp = r_precision(results, relevant);
            rr.keywords.push_back({keyword, std::move(results), ap, rp});
        }
        report.ranks.push_back(std::move(rr));
    }
    return report;
}

Judgments read_judgments(std::istream& in) {
    Judgments out;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0)
            throw ParseError("judgments: expected keyword<TAB>doc_id[,doc_id...] (line " +
                             std::to_string(n) + ")");
        std::set<std::string> docs;
        std::istringstream ids(line.substr(tab + 1));
        for (std::string id; std::getline(ids, id, ',');) {
            if (id.empty())
                throw ParseError("judgments: empty document id (line " + std::to_string(n) + ")");
            docs.insert(id);
        }
        out.emplace_back(lowercase(line.substr(0, tab)), std::move(docs));
    }
    return out;
}

void write_ranked(std::ostream& out, std::span<const RankedResult> results) {
    for (std::size_t i = 0; i < results.size(); ++i)
        out << (i + 1) << '\t' << results[i].doc_id << '\t' << format_score(results[i].score)
            << '\n';
}

void write_sweep(std::ostream& out, const SweepReport& report) {
    out << "k\tkeyword\taverage_precision\tr_precision\tranking\n";
    for (const auto& rr : report.ranks) {
        for (const auto& kq : rr.keywords) {
            out << rr.k << '\t' << kq.keyword << '\t' << format_score(kq.average_precision) << '\t'
                << format_score(kq.r_precision) << '\t';
            for (std::size_t i = 0; i < kq.results.size(); ++i)
                out << (i ? "," : "") << kq.results[i].doc_id;
            out << '\n';
        }
    }
}

}  // namespace lsa
