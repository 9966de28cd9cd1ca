// include/puncap/phonetics.hpp

// Copyright 2026 The puncap authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Pronunciation lexicon parsing, articulatory-feature edit distance, and
// pun-pair mining. A pun pair is two differently spelled words whose
// pronunciations are identical, either symbol-for-symbol ("exact") or under
// the feature metric ("ar_metric").

#ifndef PUNCAP_PHONETICS_HPP
#define PUNCAP_PHONETICS_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "puncap/common.hpp"

namespace puncap {

/// Inventory of phonemes with categorical articulatory features, loaded from
/// a TSV data file. Consonants carry {place, manner, voicing}; vowels carry
/// {height, backness, roundedness, tenseness}. Feature values are opaque
/// strings; only equality matters.
class PhonemeInventory {
 public:
  static PhonemeInventory from_stream(std::istream& in);
  static PhonemeInventory from_file(const std::string& path);

  bool contains(std::string_view symbol) const;
  std::size_t size() const { return symbols_.size(); }

  /// Distance in [0,1]: 0 iff the feature vectors are identical; for
  /// same-class phonemes the fraction of differing attributes; 1 across
  /// classes. Throws DataError on a symbol not in the inventory.
  double distance(std::string_view a, std::string_view b) const;

  /// Dense id of a symbol, or -1 if absent.
  int id_of(std::string_view symbol) const;
  const std::string& symbol(int id) const { return symbols_[id]; }

  /// Phonemes with equal feature vectors share a signature. Two
  /// pronunciations are at edit distance 0 exactly when their signature
  /// sequences are equal.
  int signature_of(int id) const { return signatures_[id]; }

 private:
  struct Entry {
    bool is_vowel = false;
    std::vector<std::string> features;  // 3 for consonants, 4 for vowels
  };

  std::vector<std::string> symbols_;
  std::vector<Entry> entries_;
  std::vector<int> signatures_;
  std::map<std::string, int, std::less<>> index_;

  int require(std::string_view symbol) const;
};

/// One dictionary entry: a word plus one of its pronunciations.
/// variant is 1 for the base entry, n+1 for a "(n)" alternate.
struct Pronunciation {
  std::string word;                   // lowercase, no whitespace
  std::vector<std::string> phonemes;  // non-empty, stress digits stripped
  int variant = 1;
};

/// Parses a CMU-format pronouncing dictionary. Lines starting with ";;;"
/// and blank lines are skipped. Entry lines look like
///
///   NIGHT  N AY1 T
///   READ(1)  R EH1 D
///
/// Words are lowercased, the "(n)" suffix becomes variant = n+1, and stress
/// digits are stripped from phoneme symbols. Malformed lines (no phonemes,
/// or a symbol missing from the inventory) are recorded in `report` and
/// skipped. Throws DataError if no line parses.
std::vector<Pronunciation> parse_pronouncing_dict(std::istream& in,
                                                  const PhonemeInventory& inventory,
                                                  ParseReport* report = nullptr);

/// Weighted Levenshtein distance between two phoneme sequences:
/// substitutions cost PhonemeInventory::distance, insertions and deletions
/// cost 1. Zero iff the sequences align with all-zero substitution costs.
double pronunciation_distance(const std::vector<std::string>& a,
                              const std::vector<std::string>& b,
                              const PhonemeInventory& inventory);

enum class PairSource { exact, ar_metric };

std::string_view to_string(PairSource source);
PairSource pair_source_from_string(std::string_view s);  // throws DataError

/// Two differently spelled words judged phonetically identical.
/// Stored in canonical order: word_a < word_b lexicographically.
struct PunPair {
  std::string word_a;
  std::string word_b;
  PairSource source = PairSource::exact;
  double distance = 0.0;

  friend bool operator==(const PunPair&, const PunPair&) = default;
};

/// The mined pun list plus its symmetric counterpart closure.
class PunLexicon {
 public:
  PunLexicon() = default;
  explicit PunLexicon(std::vector<PunPair> pairs);

  const std::vector<PunPair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }

  /// Words `word` puns with; empty set if none.
  const std::set<std::string>& counterparts_of(std::string_view word) const;

  /// TSV: word_a<TAB>word_b<TAB>source<TAB>distance, one pair per line,
  /// sorted lexicographically, LF line endings.
  void save_tsv(std::ostream& out) const;
  static PunLexicon load_tsv(std::istream& in, ParseReport* report = nullptr);

  friend bool operator==(const PunLexicon& a, const PunLexicon& b) {
    return a.pairs_ == b.pairs_;
  }

 private:
  std::vector<PunPair> pairs_;  // canonical order, sorted, unique
  std::map<std::string, std::set<std::string>, std::less<>> counterparts_;
};

/// Mines every pun pair out of a parsed dictionary: words sharing a
/// symbol-identical pronunciation variant become exact pairs, words whose
/// pronunciations only coincide under the feature metric become ar_metric
/// pairs, and trusted external (word, word) pairs are merged in as exact.
/// External pairs naming a word absent from `entries` are dropped with a
/// warning in `report`. Deterministic and independent of input order.
PunLexicon mine_pun_pairs(const std::vector<Pronunciation>& entries,
                          const std::vector<std::pair<std::string, std::string>>& external_pairs,
                          const PhonemeInventory& inventory,
                          ParseReport* report = nullptr);

}  // namespace puncap

#endif  // PUNCAP_PHONETICS_HPP
