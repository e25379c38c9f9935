#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lsa {

/// Raised for malformed corpus, config or matrix files.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Document {
    std::string id;
    std::string text;
};

/// Ordered collection of documents. Insertion order defines matrix column order.
class Corpus {
public:
    Corpus() = default;
    explicit Corpus(std::vector<Document> documents);

    /// Appends a document; throws std::invalid_argument on empty or duplicate id.
    void add(Document doc);

    const std::vector<Document>& documents() const { return documents_; }
    std::size_t size() const { return documents_.size(); }
    bool empty() const { return documents_.empty(); }

private:
    std::vector<Document> documents_;
    std::set<std::string> ids_;
};

struct TokenizerConfig {
    std::set<std::string> stopwords;
    std::map<std::string, std::string> aliases;
    std::size_t min_doc_count = 2;

    /// Checks one-step aliasing and min_doc_count >= 1.
    void validate() const;

    /// The stopword/alias set that reproduces the bundled sample matrix.
    static TokenizerConfig sample_default();
};

/// Lowercases, splits on anything that is not an ASCII letter or digit,
/// and applies the alias map. Stopwords are kept.
std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& config);

/// Lowercase + alias lookup for a single token (used for query keywords).
std::string normalize_token(std::string_view token, const TokenizerConfig& config);

struct Vocabulary {
    std::vector<std::string> terms;

    std::size_t size() const { return terms.size(); }
    bool empty() const { return terms.empty(); }
    /// Row index of a term, or npos.
    std::size_t index_of(std::string_view term) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Non-stopword tokens that occur in at least min_doc_count distinct
/// documents, ordered by first appearance.
Vocabulary select_vocabulary(const Corpus& corpus, const TokenizerConfig& config);

struct TermDocMatrix {
    Vocabulary terms;
    std::vector<std::string> doc_ids;
    std::vector<std::int64_t> counts;  // row-major, terms x docs

    std::size_t rows() const { return terms.size(); }
    std::size_t cols() const { return doc_ids.size(); }
    std::int64_t at(std::size_t term, std::size_t doc) const { return counts[term * cols() + doc]; }
    std::int64_t& at(std::size_t term, std::size_t doc) { return counts[term * cols() + doc]; }
};

inline bool operator==(const Vocabulary& a, const Vocabulary& b) { return a.terms == b.terms; }
inline bool operator==(const TermDocMatrix& a, const TermDocMatrix& b) {
    return a.terms == b.terms && a.doc_ids == b.doc_ids && a.counts == b.counts;
}

/// Term-frequency counts of each vocabulary term in each document.
TermDocMatrix build_matrix(const Corpus& corpus, const Vocabulary& vocab,
                           const TokenizerConfig& config);

// File formats.
//   corpus:  one document per line, "id<TAB>title"; blank lines ignored
//   config:  "stopword <token>", "alias <from> <to>", "min_doc_count <n>", '#' comments
//   matrix:  line 1 = doc ids joined by TAB, then "term<TAB>count<TAB>..."
Corpus read_corpus(std::istream& in);
TokenizerConfig read_tokenizer_config(std::istream& in);
TermDocMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const TermDocMatrix& m);

}  // namespace lsa
