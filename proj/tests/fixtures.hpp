#pragma once

#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "lsa/corpus.hpp"

namespace lsa::testing {

inline std::string source_path(const std::string& rel) { return std::string(LSA_SOURCE_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::vector<std::uint8_t> slurp_bytes(const std::string& path) {
    auto s = slurp(path);
    return {s.begin(), s.end()};
}

inline Corpus sample_corpus() {
    std::ifstream in(source_path("data/sample_corpus.tsv"));
    return read_corpus(in);
}

inline TokenizerConfig sample_config() {
    std::ifstream in(source_path("data/tokenizer.conf"));
    return read_tokenizer_config(in);
}

inline TermDocMatrix sample_matrix() {
    auto corpus = sample_corpus();
    auto config = sample_config();
    return build_matrix(corpus, select_vocabulary(corpus, config), config);
}

}  // namespace lsa::testing
