#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lsa/corpus.hpp"
#include "lsa/linalg.hpp"

namespace lsa {

/// Real-valued matrix carrying term (row) and document (column) labels.
struct LabeledMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    DenseMatrix values;
};

/// Counts as doubles; throws std::invalid_argument if the matrix has no cells.
LabeledMatrix to_labeled(const TermDocMatrix& m);

/// Original counts plus the full SVD of the count matrix. Immutable once fit.
class LsaModel {
public:
    const TermDocMatrix& matrix() const { return matrix_; }
    const SvdFactors& factors() const { return factors_; }
    std::size_t factor_count() const { return factors_.rank(); }

    friend LsaModel fit(TermDocMatrix matrix);

private:
    LsaModel(TermDocMatrix matrix, SvdFactors factors)
        : matrix_(std::move(matrix)), factors_(std::move(factors)) {}

    TermDocMatrix matrix_;
    SvdFactors factors_;
};

/// Decomposes the count matrix. Nothing is discarded; rank is chosen later.
LsaModel fit(TermDocMatrix matrix);

/// Rank-k approximation with the original labels; throws std::out_of_range
/// unless 1 <= k <= factor_count().
LabeledMatrix reconstruct_at_rank(const LsaModel& model, std::size_t k);

/// Either the raw counts or a rank-k reconstruction.
class Rank {
public:
    static Rank full() { return Rank(0); }
    static Rank of(std::size_t k) {
        if (k == 0) throw std::out_of_range("rank must be positive");
        return Rank(k);
    }

    bool is_full() const { return k_ == 0; }
    std::size_t k() const { return k_; }

private:
    explicit Rank(std::size_t k) : k_(k) {}
    std::size_t k_;
};

struct RankedResult {
    std::string doc_id;
    double score;
};

struct SearchOptions {
    /// Only documents scoring strictly above this are returned.
    double threshold = 0.0;
    std::optional<std::size_t> limit;
};

/// Keyword missing from the vocabulary. candidates() holds the vocabulary
/// terms sharing the longest common prefix with the keyword.
class UnknownTermError : public std::invalid_argument {
public:
    UnknownTermError(std::string term, std::vector<std::string> candidates);

    const std::string& term() const { return term_; }
    const std::vector<std::string>& candidates() const { return candidates_; }

private:
    std::string term_;
    std::vector<std::string> candidates_;
};

/// Scores every document by the keyword's row of the reconstruction (or of the
/// raw counts for Rank::full()), keeps scores above the threshold and sorts
/// by descending score, then ascending corpus position.
///
/// The keyword is lowercased but not alias-normalised; use normalize_token()
/// first when a tokenizer config is at hand.
std::vector<RankedResult> keyword_search(const LsaModel& model, std::string_view keyword,
                                         Rank rank, const SearchOptions& options = {});

/// Mean of precision@i over the ranks i holding a relevant document, divided
/// by the size of the relevant set. 0 when either list is empty.
double average_precision(std::span<const RankedResult> ranked,
                         const std::set<std::string>& relevant);

/// Fraction of the top |relevant| results that are relevant.
double r_precision(std::span<const RankedResult> ranked, const std::set<std::string>& relevant);

using Judgments = std::vector<std::pair<std::string, std::set<std::string>>>;

struct KeywordQuality {
    std::string keyword;
    std::vector<RankedResult> results;
    double average_precision;
    double r_precision;
};

struct RankReport {
    std::size_t k;
    std::vector<KeywordQuality> keywords;
};

struct SweepReport {
    std::vector<RankReport> ranks;  // strictly increasing k
};

/// Runs every judged keyword at every rank in `ks` (sorted and deduplicated
/// here). The default threshold ranks every document, which is what average
/// precision expects; pass a finite threshold to score a filtered list instead.
SweepReport sweep_ranks(const LsaModel& model, const Judgments& judgments,
                        std::vector<std::size_t> ks,
                        double threshold = -std::numeric_limits<double>::infinity());

// Text formats.
//   judgments: "keyword<TAB>doc_id[,doc_id...]"
//   ranked:    "rank<TAB>doc_id<TAB>score", score with 6 decimals
//   sweep:     header line, then "k<TAB>keyword<TAB>ap<TAB>r_precision<TAB>doc,doc,..."
Judgments read_judgments(std::istream& in);
void write_ranked(std::ostream& out, std::span<const RankedResult> results);
void write_sweep(std::ostream& out, const SweepReport& report);

}  // namespace lsa
