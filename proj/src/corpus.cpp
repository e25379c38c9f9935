#include "lsa/corpus.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace lsa {

namespace {

bool is_token_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

char to_lower_ascii(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = to_lower_ascii(c);
    return out;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string at_line(std::size_t n) { return " (line " + std::to_string(n) + ")"; }

}  // namespace

Corpus::Corpus(std::vector<Document> documents) {
    for (auto& d : documents) add(std::move(d));
}

void Corpus::add(Document doc) {
    if (doc.id.empty()) throw std::invalid_argument("document id must be non-empty");
    if (!ids_.insert(doc.id).second)
        throw std::invalid_argument("duplicate document id '" + doc.id + "'");
    documents_.push_back(std::move(doc));
}

void TokenizerConfig::validate() const {
    if (min_doc_count < 1) throw std::invalid_argument("min_doc_count must be >= 1");
    for (const auto& [from, to] : aliases) {
        if (aliases.count(to))
            throw std::invalid_argument("alias target '" + to + "' of '" + from +
                                        "' is itself an alias key");
    }
}

TokenizerConfig TokenizerConfig::sample_default() {
    TokenizerConfig cfg;
    cfg.stopwords = {"a", "and", "of", "the", "in", "to", "for"};
    cfg.aliases = {{"times", "time"}};
    cfg.min_doc_count = 2;
    return cfg;
}

std::string normalize_token(std::string_view token, const TokenizerConfig& config) {
    std::string lower = lowercase(token);
    if (auto it = config.aliases.find(lower); it != config.aliases.end()) return it->second;
    return lower;
}

std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& config) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!is_token_char(text[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && is_token_char(text[j])) ++j;
        tokens.push_back(normalize_token(text.substr(i, j - i), config));
        i = j;
    }
    return tokens;
}

std::size_t Vocabulary::index_of(std::string_view term) const {
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (terms[i] == term) return i;
    return npos;
}

Vocabulary select_vocabulary(const Corpus& corpus, const TokenizerConfig& config) {
    config.validate();
    if (corpus.empty()) throw std::invalid_argument("empty corpus");

    std::vector<std::string> first_seen;
    std::unordered_map<std::string, std::size_t> doc_freq;
    for (const auto& doc : corpus.documents()) {
        std::unordered_set<std::string> in_doc;
        for (auto& tok : tokenize(doc.text, config)) {
            if (config.stopwords.count(tok)) continue;
            if (!in_doc.insert(tok).second) continue;
            if (doc_freq[tok]++ == 0) first_seen.push_back(tok);
        }
    }

    Vocabulary vocab;
    for (auto& tok : first_seen)
        if (doc_freq[tok] >= config.min_doc_count) vocab.terms.push_back(tok);
    return vocab;
}

TermDocMatrix build_matrix(const Corpus& corpus, const Vocabulary& vocab,
                           const TokenizerConfig& config) {
    TermDocMatrix m;
    m.terms = vocab;
    for (const auto& doc : corpus.documents()) m.doc_ids.push_back(doc.id);
    m.counts.assign(m.rows() * m.cols(), 0);

    std::unordered_map<std::string, std::size_t> row_of;
    for (std::size_t i = 0; i < vocab.terms.size(); ++i) row_of.emplace(vocab.terms[i], i);

    for (std::size_t d = 0; d < corpus.size(); ++d) {
        for (auto& tok : tokenize(corpus.documents()[d].text, config)) {
            if (auto it = row_of.find(tok); it != row_of.end()) ++m.at(it->second, d);
        }
    }
    return m;
}

Corpus read_corpus(std::istream& in) {
    Corpus corpus;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        strip_cr(line);
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError("corpus: expected id<TAB>title" + at_line(n));
        std::string id = line.substr(0, tab);
        if (id.empty()) throw ParseError("corpus: empty document id" + at_line(n));
        try {
            corpus.add({std::move(id), line.substr(tab + 1)});
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("corpus: ") + e.what() + at_line(n));
        }
    }
    return corpus;
}

TokenizerConfig read_tokenizer_config(std::istream& in) {
    TokenizerConfig cfg;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string key;
        if (!(fields >> key)) continue;
        std::vector<std::string> args;
        for (std::string a; fields >> a;) args.push_back(a);

        if (key == "stopword" && args.size() == 1) {
            cfg.stopwords.insert(lowercase(args[0]));
        } else if (key == "alias" && args.size() == 2) {
            cfg.aliases[lowercase(args[0])] = lowercase(args[1]);
        } else if (key == "min_doc_count" && args.size() == 1) {
            std::size_t v = 0;
            auto [p, ec] = std::from_chars(args[0].data(), args[0].data() + args[0].size(), v);
            if (ec != std::errc{} || p != args[0].data() + args[0].size() || v < 1)
                throw ParseError("config: min_doc_count must be a positive integer" + at_line(n));
            cfg.min_doc_count = v;
        } else {
            throw ParseError("config: unrecognised directive '" + key + "'" + at_line(n));
        }
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    return cfg;
}

TermDocMatrix read_matrix(std::istream& in) {
    TermDocMatrix m;
    std::string line;
    if (!std::getline(in, line)) throw ParseError("matrix: missing header line");
    strip_cr(line);
    if (line.empty()) throw ParseError("matrix: empty header line");
    m.doc_ids = split(line, '\t');
    {
        std::set<std::string> seen;
        for (auto& id : m.doc_ids) {
            if (id.empty()) throw ParseError("matrix: empty document id in header");
            if (!seen.insert(id).second) throw ParseError("matrix: duplicate document id '" + id + "'");
        }
    }

    std::size_t n = 1;
    while (std::getline(in, line)) {
        ++n;
        strip_cr(line);
        if (line.empty()) continue;
        auto fields = split(line, '\t');
        if (fields.size() != m.doc_ids.size() + 1)
            throw ParseError("matrix: expected " + std::to_string(m.doc_ids.size() + 1) +
                             " fields" + at_line(n));
        if (fields[0].empty()) throw ParseError("matrix: empty term" + at_line(n));
        if (m.terms.index_of(fields[0]) != Vocabulary::npos)
            throw ParseError("matrix: duplicate term '" + fields[0] + "'" + at_line(n));
        m.terms.terms.push_back(fields[0]);
        for (std::size_t j = 1; j < fields.size(); ++j) {
            std::int64_t v = 0;
            const auto& f = fields[j];
            auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (ec != std::errc{} || p != f.data() + f.size() || v < 0)
                throw ParseError("matrix: bad count '" + f + "'" + at_line(n));
            m.counts.push_back(v);
        }
    }
    return m;
}

void write_matrix(std::ostream& out, const TermDocMatrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "\t" : "") << m.doc_ids[j];
    out << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << m.terms.terms[i];
        for (std::size_t j = 0; j < m.cols(); ++j) out << '\t' << m.at(i, j);
        out << '\n';
    }
}

}  // namespace lsa
