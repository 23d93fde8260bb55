// Copyright 2026 The NewsForm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "newsform/pipeline.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "newsform/detail/traits.hpp"
#include "newsform/text_util.hpp"

namespace newsform {

namespace {

constexpr std::array<std::string_view, 13> kPosNames = {
    "DET", "NOUN", "PROPN", "PRON", "VERB", "ADJ", "ADV", "NUM", "PREP", "CONJ", "PUNCT", "SYM", "OTHER"};

constexpr std::array<std::string_view, 12> kEntityKindNames = {
    "Person", "Location", "Organization", "Product", "Number", "Percent",
    "Money",  "Duration", "Temperature",  "Speed",   "Distance", "Date"};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_high(char c) { return static_cast<unsigned char>(c) >= 0x80; }
bool is_word_char(char c) { return is_alpha(c) || is_digit(c) || is_high(c); }

using WordSet = std::unordered_set<std::string_view>;

// Abbreviations that introduce a name and never end a sentence.
const WordSet kTitleAbbreviations = {"mr.",   "mrs.", "ms.",  "dr.",  "prof.", "sen.", "rep.",
                                     "gov.",  "gen.", "col.", "lt.",  "sgt.",  "capt.", "st.",
                                     "rev.",  "maj.", "adm.", "cmdr.", "pres.", "gens."};

// Abbreviations that may end a sentence.
const WordSet kOtherAbbreviations = {
    "inc.", "corp.", "co.",  "ltd.", "bros.", "jr.",  "sr.",   "etc.", "vs.",  "e.g.",
    "i.e.", "jan.",  "feb.", "mar.", "apr.",  "aug.", "sept.", "sep.", "oct.", "nov.",
    "dec.", "no.",   "mt.",  "ft.",  "approx.", "dept.", "univ.", "ave.", "blvd."};

// Capitalized words that typically open a new sentence after an abbreviation.
const WordSet kSentenceStarters = {"The", "A",   "An",  "He",   "She",   "It",    "They",
                                   "We",  "I",   "But", "And",  "In",    "On",    "At",
                                   "This", "That", "These", "Those", "There", "His", "Her",
                                   "Its", "Their", "However", "Meanwhile", "Officials", "Police"};

bool is_initials(std::string_view word) {
  // J  or  U.S  (the final period is not part of `word`)
  if (word.size() == 1) return is_upper(word[0]);
  if (word.size() < 3) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i % 2 == 0 && !is_alpha(word[i])) return false;
    if (i % 2 == 1 && word[i] != '.') return false;
  }
  return true;
}

bool is_abbreviation(std::string_view word_with_dot) {
  std::string lower = text::to_lower(word_with_dot);
  return kTitleAbbreviations.count(lower) || kOtherAbbreviations.count(lower);
}

// --- tagger word lists -------------------------------------------------------

const std::unordered_map<std::string_view, Pos>& closed_class() {
  static const std::unordered_map<std::string_view, Pos> table = [] {
    std::unordered_map<std::string_view, Pos> t;
    for (auto w : {"the", "a", "an", "this", "that", "these", "those", "some", "any", "each",
                   "every", "no", "its", "his", "their", "our", "my", "your", "another", "all",
                   "both", "either", "neither", "such", "several", "many", "few", "most"})
      t[w] = Pos::kDet;
    for (auto w : {"he", "him", "she", "her", "hers", "it", "they", "them", "we", "us", "i",
                   "me", "you", "who", "whom", "himself", "herself", "itself", "themselves",
                   "which", "what", "whose"})
      t[w] = Pos::kPron;
    for (auto w : {"of", "in", "on", "at", "by", "for", "with", "from", "to", "into", "over",
                   "under", "about", "after", "before", "during", "since", "until", "than",
                   "through", "between", "against", "among", "across", "near", "per", "via",
                   "without", "within", "upon", "as", "like", "beyond", "despite", "amid",
                   "toward", "towards", "off", "up", "down", "out", "onto", "behind", "around"})
      t[w] = Pos::kPrep;
    for (auto w : {"and", "or", "but", "nor", "so", "yet", "if", "because", "while", "although",
                   "though", "whether", "unless", "whereas"})
      t[w] = Pos::kConj;
    for (auto w : {"not", "also", "very", "more", "less", "least", "only", "just", "now", "then",
                   "there", "here", "still", "even", "already", "again", "ago", "never",
                   "always", "often", "soon", "later", "almost", "nearly", "too", "well",
                   "however", "rather", "quite", "once", "yesterday", "today", "tomorrow"})
      t[w] = Pos::kAdv;
    for (auto w : {"zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
                   "nine", "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen",
                   "sixteen", "seventeen", "eighteen", "nineteen", "twenty", "thirty", "forty",
                   "fifty", "sixty", "seventy", "eighty", "ninety", "hundred", "hundreds",
                   "thousand", "thousands", "million", "millions", "billion", "billions",
                   "trillion", "dozen", "dozens"})
      t[w] = Pos::kNum;
    for (auto w : {"is", "are", "was", "were", "be", "been", "being", "am", "has", "have",
                   "had", "do", "does", "did", "will", "would", "shall", "should", "can",
                   "could", "may", "might", "must", "said", "says", "say", "told", "struck",
                   "strike", "strikes", "hit", "hits", "kill", "kills", "injure", "injures",
                   "raise", "raises", "lower", "lowers", "cut", "cuts", "held", "hold", "holds",
                   "left", "kept", "keep", "keeps", "rose", "rise", "rises", "fell", "fall",
                   "falls", "grew", "grow", "grows", "gained", "lost", "lose", "loses", "won",
                   "win", "wins", "beat", "beats", "bought", "buy", "buys", "sold", "sell",
                   "sells", "acquire", "acquires", "agree", "agrees", "name", "names",
                   "appoint", "appoints", "resign", "resigns", "pass", "passes", "reject",
                   "rejects", "sign", "signs", "veto", "vetoes", "became", "become", "becomes",
                   "get", "gets", "got", "made", "make", "makes", "took", "take", "takes",
                   "gave", "give", "gives", "went", "go", "goes", "came", "come", "comes",
                   "saw", "see", "sees", "led", "lead", "leads", "paid", "pay", "pays", "met",
                   "meet", "meets", "ran", "run", "runs", "shook", "shake", "shakes", "swept",
                   "sweep", "sweeps", "tore", "blew", "fled", "flee", "flees", "sank", "sink",
                   "sinks", "merge", "merges", "report", "reports", "announce", "announces",
                   "plan", "plans", "expect", "expects", "posted", "posts", "post", "warn",
                   "warns", "declare", "declares", "issue", "issues", "file", "files",
                   "sue", "sues", "launch", "launches", "release", "releases", "unveil",
                   "unveils", "introduce", "introduces", "topple", "topples", "maintain",
                   "maintains", "confront", "confronts", "quit", "quits", "leave", "leaves"})
      t[w] = Pos::kVerb;
    t["'s"] = Pos::kOther;
    return t;
  }();
  return table;
}

// Lowercase words whose suffix would mislead the suffix rules.
const WordSet kSuffixNouns = {
    "official", "trial", "capital", "rival", "approval", "arrival", "proposal", "signal",
    "total", "hospital", "festival", "animal", "interval", "journal", "material", "potential",
    "referral", "withdrawal", "terminal", "general", "principal", "criminal", "survival",
    "renewal", "removal", "disposal", "tribunal", "arsenal", "editorial", "executive",
    "detective", "representative", "relative", "objective", "initiative", "incentive",
    "alternative", "public", "traffic", "music", "topic", "clinic", "republic", "critic",
    "epidemic", "meeting", "morning", "evening", "ceiling", "thing", "king", "ring", "wing",
    "ruling", "funding", "housing", "offering", "hearing", "trading", "spending", "warning",
    "landing", "opening", "building", "beginning", "string", "spring", "wedding", "bombing",
    "shooting", "family", "rally", "ally", "supply", "reply", "assembly", "monopoly", "anomaly",
    "fly", "belly", "bully", "hundred", "kindred", "speed", "need", "seed", "bed", "shed",
    "red", "sled", "bled", "fled"};

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() > suffix.size() + 1 && w.substr(w.size() - suffix.size()) == suffix;
}

std::optional<Pos> suffix_tag(std::string_view w) {
  if (kSuffixNouns.count(w)) return Pos::kNoun;
  if (ends_with(w, "ly")) return Pos::kAdv;
  if (ends_with(w, "ing")) return Pos::kVerb;
  if (ends_with(w, "ed") && !ends_with(w, "eed")) return Pos::kVerb;
  for (auto s : {"ment", "tion", "sion", "ness", "ity"})
    if (ends_with(w, s)) return Pos::kNoun;
  if (w.size() >= 6 && ends_with(w, "al")) return Pos::kAdj;
  for (auto s : {"ern", "ous", "ive", "ic", "ful", "less", "able", "ible"})
    if (ends_with(w, s)) return Pos::kAdj;
  return std::nullopt;
}

bool is_noun_pos(Pos p) { return p == Pos::kNoun || p == Pos::kPropn; }

}  // namespace

std::string_view pos_name(Pos p) { return kPosNames[static_cast<std::size_t>(p)]; }

std::string_view entity_kind_name(EntityKind k) {
  return kEntityKindNames[static_cast<std::size_t>(k)];
}

std::optional<EntityKind> parse_entity_kind(std::string_view name) {
  for (std::size_t i = 0; i < kEntityKindNames.size(); ++i)
    if (kEntityKindNames[i] == name) return static_cast<EntityKind>(i);
  return std::nullopt;
}

// --- sentences ----------------------------------------------------------------

std::vector<Span> split_sentences(std::string_view text) {
  std::vector<Span> spans;
  const std::size_t n = text.size();
  std::size_t start = std::string_view::npos;
  std::size_t last_non_space = 0;

  auto close = [&](std::size_t end) {
    spans.push_back(Span{start, end});
    start = std::string_view::npos;
  };

  for (std::size_t i = 0; i < n; ++i) {
    char c = text[i];
    if (start == std::string_view::npos) {
      if (is_space(c)) continue;
      start = i;
    }
    if (c == '\n') {
      // A blank line ends a sentence even without a terminator.
      std::size_t j = i + 1;
      while (j < n && (text[j] == ' ' || text[j] == '\t' || text[j] == '\r')) ++j;
      if (j < n && text[j] == '\n') {
        close(last_non_space + 1);
        continue;
      }
    }
    if (!is_space(c)) last_non_space = i;
    if (c != '.' && c != '?' && c != '!') continue;

    std::size_t j = i + 1;
    while (j < n && (text[j] == '.' || text[j] == '?' || text[j] == '!' || text[j] == '"' ||
                     text[j] == '\'' || text[j] == ')' || text[j] == ']'))
      ++j;
    if (j < n && !is_space(text[j])) continue;  // 4.2, U.S.A, Amazon.com

    std::size_t k = j;
    while (k < n && is_space(text[k])) ++k;
    if (k < n && is_lower(text[k])) continue;  // next word lowercase: same sentence

    if (c == '.' && j == i + 1) {
      std::size_t w = i;
      while (w > start && !is_space(text[w - 1])) --w;
      std::string_view word = text.substr(w, i - w);
      while (!word.empty() && (word.front() == '(' || word.front() == '"')) word.remove_prefix(1);
      std::string with_dot = std::string(word) + ".";
      if (kTitleAbbreviations.count(text::to_lower(with_dot))) continue;
      if (is_initials(word) || is_abbreviation(with_dot)) {
        std::size_t e = k;
        while (e < n && is_word_char(text[e])) ++e;
        if (k < n && !kSentenceStarters.count(text.substr(k, e - k))) continue;
      }
    }
    last_non_space = j - 1;
    close(j);
    i = j - 1;
  }
  if (start != std::string_view::npos) close(last_non_space + 1);
  return spans;
}

// --- tokens -------------------------------------------------------------------

std::vector<Token> tokenize(std::string_view text, Span span) {
  std::vector<Token> tokens;
  std::size_t i = span.start;
  const std::size_t end = std::min(span.end, text.size());
  auto emit = [&](std::size_t a, std::size_t b) {
    tokens.push_back(Token{std::string(text.substr(a, b - a)), a, b, Pos::kOther});
  };

  while (i < end) {
    char c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    // Multibyte currency symbols.
    bool symbol = false;
    for (std::string_view sym : {"\xC2\xA3", "\xE2\x82\xAC", "\xC2\xA5"}) {
      if (text.substr(i, sym.size()) == sym) {
        emit(i, i + sym.size());
        i += sym.size();
        symbol = true;
        break;
      }
    }
    if (symbol) continue;

    if (is_digit(c)) {
      std::size_t j = i;
      while (j < end && is_digit(text[j])) ++j;
      while (j + 1 < end && (text[j] == ',' || text[j] == '.') && is_digit(text[j + 1])) {
        ++j;
        while (j < end && is_digit(text[j])) ++j;
      }
      while (j < end && is_alpha(text[j])) ++j;  // 1990s, 3rd
      emit(i, j);
      i = j;
      continue;
    }
    if (is_alpha(c) || is_high(c)) {
      std::size_t j = i;
      while (true) {
        while (j < end && is_word_char(text[j])) ++j;
        if (j + 1 < end && (text[j] == '-' || text[j] == '&' || text[j] == '\'' || text[j] == '.') &&
            is_word_char(text[j + 1])) {
          ++j;
          continue;
        }
        break;
      }
      std::string_view word = text.substr(i, j - i);
      if (j < end && text[j] == '.') {
        std::string with_dot = std::string(word) + ".";
        if (is_abbreviation(with_dot) || is_initials(word)) ++j;
      }
      word = text.substr(i, j - i);
      if (word.size() > 2 && (word.ends_with("'s") || word.ends_with("'S"))) {
        emit(i, j - 2);
        emit(j - 2, j);
      } else {
        emit(i, j);
      }
      i = j;
      continue;
    }
    // Punctuation and symbols; runs of the same mark form one token ("--", "...").
    std::size_t j = i + 1;
    if (c == '-' || c == '.')
      while (j < end && text[j] == c) ++j;
    emit(i, j);
    i = j;
  }
  return tokens;
}

Pos tag_word(std::string_view word, bool sentence_initial) {
  (void)sentence_initial;
  if (word.empty()) return Pos::kOther;
  std::string lower = text::to_lower(word);
  const auto& closed = closed_class();
  if (auto it = closed.find(lower); it != closed.end()) return it->second;

  char c = word[0];
  if (!is_word_char(c)) {
    if (word == "$" || word == "%" || word == "#" || word == "@" || word == "&" || is_high(c))
      return Pos::kSym;
    return Pos::kPunct;
  }
  bool has_upper = std::any_of(word.begin(), word.end(), is_upper);
  bool has_digit = std::any_of(word.begin(), word.end(), is_digit);
  if (!has_upper && !has_digit) {
    if (auto p = suffix_tag(lower)) return *p;
  }
  if (is_upper(c) || is_high(c)) return has_digit && !is_upper(c) ? Pos::kNum : Pos::kPropn;
  if (has_digit) return Pos::kNum;
  return Pos::kNoun;
}

std::vector<Token> tag_pos(std::string_view text, Span span) {
  auto tokens = tokenize(text, span);
  for (std::size_t i = 0; i < tokens.size(); ++i) tokens[i].pos = tag_word(tokens[i].text, i == 0);
  return tokens;
}

// --- noun groups ----------------------------------------------------------------

std::vector<NounGroup> chunk_noun_groups(const std::vector<Token>& tokens) {
  std::vector<NounGroup> groups;
  const std::size_t n = tokens.size();
  std::size_t i = 0;
  while (i < n) {
    if (tokens[i].pos == Pos::kPron) {
      groups.push_back(NounGroup{i, i, i});
      ++i;
      continue;
    }
    std::size_t j = i;
    if (tokens[j].pos == Pos::kDet) ++j;
    while (j < n && (tokens[j].pos == Pos::kAdj || tokens[j].pos == Pos::kNum)) ++j;
    std::size_t k = j;
    while (k < n && is_noun_pos(tokens[k].pos)) ++k;
    if (k > j) {
      groups.push_back(NounGroup{i, k - 1, k - 1});
      i = k;
    } else {
      ++i;
    }
  }
  return groups;
}

// --- entities -------------------------------------------------------------------

namespace {

struct Unit {
  std::size_t first = 0;
  std::size_t last = 0;
  std::vector<const LexiconEntry*> entries;

  bool has(LexKind k) const {
    return std::any_of(entries.begin(), entries.end(), [&](auto* e) { return e->kind == k; });
  }
  const LexiconEntry* get(LexKind k) const {
    for (auto* e : entries)
      if (e->kind == k) return e;
    return nullptr;
  }
  bool raw() const { return entries.empty(); }
};

Attributes pick_attrs(const LexiconEntry& e, std::initializer_list<std::string_view> skip) {
  Attributes out;
  for (const auto& [k, v] : e.attributes)
    if (std::find(skip.begin(), skip.end(), k) == skip.end()) out.emplace_back(k, v);
  return out;
}

std::optional<std::string> attr_string(const LexiconEntry& e, std::string_view key) {
  if (auto v = e.attr(key)) return std::string(*v);
  return std::nullopt;
}

std::optional<EntityReading> reading_of(const LexiconEntry& e) {
  switch (e.kind) {
    case LexKind::kPersonName: {
      Person p;
      p.given = attr_string(e, "given");
      p.family = attr_string(e, "family");
      if (!p.given && !p.family) p.family = e.normalized;
      return EntityReading{EntityKind::kPerson, p, pick_attrs(e, {"given", "family"})};
    }
    case LexKind::kGivenName: {
      Person p;
      p.given = e.normalized;
      return EntityReading{EntityKind::kPerson, p, pick_attrs(e, {})};
    }
    case LexKind::kFamilyName: {
      Person p;
      p.family = e.normalized;
      return EntityReading{EntityKind::kPerson, p, pick_attrs(e, {})};
    }
    case LexKind::kTitle: {
      if (e.attr("role") == "prefix") return std::nullopt;
      Person p;
      p.function = e.normalized;
      return EntityReading{EntityKind::kPerson, p, pick_attrs(e, {"role"})};
    }
    case LexKind::kCity: {
      Location l;
      l.city = e.normalized;
      l.country = attr_string(e, "country");
      l.state = attr_string(e, "state");
      if (auto v = e.attr("lat")) l.latitude = Decimal::parse(*v);
      if (auto v = e.attr("lon")) l.longitude = Decimal::parse(*v);
      return EntityReading{EntityKind::kLocation, l, {}};
    }
    case LexKind::kState: {
      Location l;
      l.state = e.normalized;
      l.country = attr_string(e, "country");
      return EntityReading{EntityKind::kLocation, l, {}};
    }
    case LexKind::kCountry: {
      // Country reference points stay in the attributes: a story naming only a
      // country does not say where in it the event happened.
      Location l;
      l.country = e.normalized;
      return EntityReading{EntityKind::kLocation, l, pick_attrs(e, {})};
    }
    case LexKind::kRegion: {
      Location l;
      l.region = e.normalized;
      l.country = attr_string(e, "country");
      l.state = attr_string(e, "state");
      l.continent = attr_string(e, "continent");
      return EntityReading{EntityKind::kLocation, l, {}};
    }
    case LexKind::kContinent: {
      Location l;
      l.continent = e.normalized;
      return EntityReading{EntityKind::kLocation, l, {}};
    }
    case LexKind::kOrgName: {
      Organization o;
      o.full_name = e.normalized;
      o.organization_type = attr_string(e, "type");
      o.ticker = attr_string(e, "ticker");
      return EntityReading{EntityKind::kOrganization, o, pick_attrs(e, {"type", "ticker"})};
    }
    case LexKind::kSportsTeam: {
      Organization o;
      o.full_name = e.normalized;
      o.organization_type = "SportsTeam";
      o.sport = attr_string(e, "sport");
      return EntityReading{EntityKind::kOrganization, o, {}};
    }
    case LexKind::kProduct:
      return EntityReading{EntityKind::kProduct, e.normalized, pick_attrs(e, {})};
    case LexKind::kNumberWord: {
      auto d = Decimal::parse(e.normalized);
      if (!d) return std::nullopt;
      return EntityReading{EntityKind::kNumber, Quantity{*d, ""}, {}};
    }
    case LexKind::kPronoun: {
      auto refers = e.attr("refers").value_or("Person");
      if (refers == "Organization")
        return EntityReading{EntityKind::kOrganization, Organization{}, pick_attrs(e, {"refers"})};
      return EntityReading{EntityKind::kPerson, Person{}, pick_attrs(e, {"refers"})};
    }
    case LexKind::kOrgSuffix:
    case LexKind::kCurrencyUnit:
    case LexKind::kUnit:
      return std::nullopt;
  }
  return std::nullopt;
}

void add_unique(std::vector<EntityReading>& out, EntityReading r) {
  if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
}

std::optional<std::string_view> sex_of(const Attributes& attrs) {
  for (const auto& [k, v] : attrs)
    if (k == "sex") return std::string_view(v);
  return std::nullopt;
}

void set_attr(Attributes& attrs, std::string_view key, std::string value) {
  for (auto& [k, v] : attrs)
    if (k == key) {
      v = std::move(value);
      return;
    }
  attrs.emplace_back(std::string(key), std::move(value));
}

const WordSet kWeekdays = {"Monday", "Tuesday", "Wednesday", "Thursday",
                           "Friday", "Saturday", "Sunday"};
const WordSet kMonths = {"January", "February", "March",     "April",   "May",      "June",
                         "July",    "August",   "September", "October", "November", "December"};

class EntityParser {
 public:
  EntityParser(SentenceParse& s, const LexiconSet& lex, DocumentMemory* memory)
      : s_(s), lex_(lex), memory_(memory) {
    for (const auto& t : s_.tokens) words_.push_back(t.text);
    build_units();
  }

  void run() {
    std::size_t u = 0;
    while (u < units_.size()) {
      std::size_t next = u;
      if (try_quantity(u, next) || try_date(u, next) || try_product(u, next) ||
          try_organization(u, next) || try_person(u, next) || plain(u, next)) {
        u = next;
      } else {
        ++u;
      }
    }
    widen_groups();
  }

 private:
  void build_units() {
    std::size_t i = 0;
    while (i < words_.size()) {
      auto m = lex_.longest_match(words_, i);
      if (m.length > 0) {
        units_.push_back(Unit{i, i + m.length - 1, std::move(m.entries)});
        i += m.length;
      } else {
        units_.push_back(Unit{i, i, {}});
        ++i;
      }
    }
  }

  const Token& tok(std::size_t i) const { return s_.tokens[i]; }
  bool capitalized_raw(const Unit& u) const {
    return u.raw() && tok(u.first).pos == Pos::kPropn && is_upper(tok(u.first).text[0]);
  }

  void add_mention(std::size_t first, std::size_t last, std::vector<EntityReading> readings,
                   bool pronoun = false) {
    if (readings.empty()) return;
    EntityMention m;
    m.first = first;
    m.last = last;
    m.readings = std::move(readings);
    m.pronoun = pronoun;
    s_.mentions.push_back(std::move(m));
  }

  void remember(const Person& p) {
    if (memory_ && p.family) {
      Person learned;
      learned.family = p.family;
      learned.given = p.given;
      memory_->family_names.emplace(*p.family, learned);
    }
  }

  // --- numbers, money and measures ---

  // Parses a number starting at unit u; returns the value and the next unit.
  std::optional<Decimal> number_at(std::size_t u, std::size_t& next) const {
    if (u >= units_.size()) return std::nullopt;
    const Unit& first = units_[u];
    std::optional<Decimal> value;
    std::size_t v = u;
    if (first.raw() && is_digit(tok(first.first).text[0])) {
      std::string digits;
      for (char c : tok(first.first).text) {
        if (c == ',') continue;
        if (!is_digit(c) && c != '.') return std::nullopt;  // 1990s, 3rd
        digits.push_back(c);
      }
      value = Decimal::parse(digits);
      if (!value) return std::nullopt;
      ++v;
    }
    // Word numbers and magnitude words: "five thousand", "2 million".
    std::int64_t total = 0, current = 0;
    bool words = false;
    if (value) {
      // Only magnitude words may follow digits.
      while (v < units_.size()) {
        auto* e = units_[v].get(LexKind::kNumberWord);
        if (!e || e->attr("role") != "magnitude") break;
        int exponent = static_cast<int>(e->normalized.size()) - 1;
        auto shifted = value->shifted(exponent);
        if (!shifted) break;
        value = shifted->normalized();
        ++v;
      }
      next = v;
      return value;
    }
    while (v < units_.size()) {
      auto* e = units_[v].get(LexKind::kNumberWord);
      if (!e) {
        // "one hundred and five"
        if (words && tok(units_[v].first).text == "and" && v + 1 < units_.size() &&
            units_[v + 1].get(LexKind::kNumberWord) &&
            units_[v + 1].get(LexKind::kNumberWord)->attr("role") != "magnitude") {
          ++v;
          continue;
        }
        break;
      }
      std::int64_t n = std::stoll(e->normalized);
      if (e->attr("role") == "magnitude") {
        current = (current == 0 ? 1 : current) * n;
        if (n >= 1000) {
          total += current;
          current = 0;
        }
      } else {
        current += n;
      }
      words = true;
      ++v;
    }
    if (!words) return std::nullopt;
    next = v;
    return Decimal(total + current);
  }

  bool try_quantity(std::size_t u, std::size_t& next) {
    std::size_t v = u;
    std::optional<std::string> currency;
    std::optional<Decimal> scale;
    if (auto* e = units_[u].get(LexKind::kCurrencyUnit); e && e->attr("role") == "symbol") {
      currency = e->normalized;
      ++v;
    }
    std::size_t after = v;
    auto value = number_at(v, after);
    if (!value) return false;
    v = after;

    // Year + product: "2000 Audi TT Quattro".
    if (!currency && v < units_.size() && units_[v].has(LexKind::kProduct) &&
        value->is_integer() && value->compare(Decimal(1900)) >= 0 &&
        value->compare(Decimal(2100)) < 0 && units_[u].raw()) {
      auto* p = units_[v].get(LexKind::kProduct);
      Attributes attrs = pick_attrs(*p, {});
      attrs.emplace_back("year", value->to_string());
      add_mention(units_[u].first, units_[v].last,
                  {EntityReading{EntityKind::kProduct, p->normalized, std::move(attrs)}});
      next = v + 1;
      return true;
    }

    // Ranges take the first bound: "two to three hours". A descending pair
    // such as a 63 to 37 vote is two numbers.
    if (v + 1 < units_.size() && units_[v].raw() &&
        (tok(units_[v].first).text == "to" || tok(units_[v].first).text == "-")) {
      std::size_t after_range = v + 1;
      if (auto* e = units_[v + 1].get(LexKind::kCurrencyUnit); e && e->attr("role") == "symbol")
        ++after_range;
      std::size_t end_range = after_range;
      auto upper = number_at(after_range, end_range);
      if (upper && upper->compare(*value) >= 0) v = end_range;
    }

    std::size_t last_token = units_[v - 1].last;
    EntityReading reading{EntityKind::kNumber, Quantity{*value, ""}, {}};
    if (v < units_.size()) {
      if (auto* e = units_[v].get(LexKind::kCurrencyUnit); e && e->attr("role") == "word") {
        if (!currency || *currency == e->normalized) {
          currency = e->normalized;
          if (auto s = e->attr("scale"); s && *s == "0.01") {
            if (auto shifted = value->shifted(-2)) value = shifted->normalized();
          }
          last_token = units_[v].last;
          ++v;
        }
      } else if (auto* e2 = units_[v].get(LexKind::kUnit); e2 && !currency) {
        auto measure = parse_entity_kind(e2->attr("measure").value_or("Number"));
        reading = EntityReading{measure.value_or(EntityKind::kNumber),
                                Quantity{*value, e2->normalized}, {}};
        last_token = units_[v].last;
        ++v;
      }
    }
    if (currency) reading = EntityReading{EntityKind::kMoney, Money{*value, *currency}, {}};
    (void)scale;
    add_mention(units_[u].first, last_token, {std::move(reading)});
    next = v;
    return true;
  }

  bool try_date(std::size_t u, std::size_t& next) {
    const Unit& unit = units_[u];
    if (!unit.raw()) return false;
    const std::string& w = tok(unit.first).text;
    if (kWeekdays.count(w)) {
      add_mention(unit.first, unit.last, {EntityReading{EntityKind::kDate, w, {}}});
      next = u + 1;
      return true;
    }
    if (kMonths.count(w) && u + 1 < units_.size() && units_[u + 1].raw() &&
        text::is_all_digits(tok(units_[u + 1].first).text) &&
        tok(units_[u + 1].first).text.size() <= 2) {
      std::string date = w + " " + tok(units_[u + 1].first).text;
      std::size_t v = u + 2;
      if (v + 1 < units_.size() && tok(units_[v].first).text == "," && units_[v + 1].raw() &&
          tok(units_[v + 1].first).text.size() == 4 &&
          text::is_all_digits(tok(units_[v + 1].first).text)) {
        date += ", " + tok(units_[v + 1].first).text;
        v += 2;
      }
      add_mention(unit.first, units_[v - 1].last, {EntityReading{EntityKind::kDate, date, {}}});
      next = v;
      return true;
    }
    return false;
  }

  // Organization + product: "United Airlines Boeing 777".
  bool try_product(std::size_t u, std::size_t& next) {
    if (u + 1 >= units_.size()) return false;
    auto* org = units_[u].get(LexKind::kOrgName);
    auto* product = units_[u + 1].get(LexKind::kProduct);
    if (!org || !product) return false;
    Attributes attrs = pick_attrs(*product, {});
    attrs.emplace_back("carrier", org->normalized);
    add_mention(units_[u].first, units_[u + 1].last,
                {EntityReading{EntityKind::kProduct, product->normalized, std::move(attrs)}});
    next = u + 2;
    return true;
  }

  // Name + corporate suffix: "Healtheon Corp", "Acme Widget Inc."
  bool try_organization(std::size_t u, std::size_t& next) {
    std::size_t v = u;
    std::string name;
    std::optional<Organization> base;
    Attributes attrs;
    if (auto* org = units_[u].get(LexKind::kOrgName)) {
      auto r = reading_of(*org);
      base = std::get<Organization>(r->value);
      attrs = r->attributes;
      name = org->normalized;
      ++v;
    } else {
      while (v < units_.size() && capitalized_raw(units_[v])) {
        if (!name.empty()) name += " ";
        name += tok(units_[v].first).text;
        ++v;
      }
      if (v == u) return false;
    }
    if (v >= units_.size() || !units_[v].has(LexKind::kOrgSuffix)) return false;
    auto* suffix = units_[v].get(LexKind::kOrgSuffix);
    Organization o = base.value_or(Organization{});
    o.full_name = name + " " + suffix->normalized;
    if (!o.organization_type) o.organization_type = "Company";
    add_mention(units_[u].first, units_[v].last,
                {EntityReading{EntityKind::kOrganization, o, std::move(attrs)}});
    next = v + 1;
    return true;
  }

  // Title* (PersonName | GivenName Family? | Family)
  bool try_person(std::size_t u, std::size_t& next) {
    std::size_t v = u;
    Person p;
    Attributes attrs;
    int titles = 0;
    std::vector<std::string> functions;
    while (v < units_.size() && units_[v].has(LexKind::kTitle)) {
      auto* t = units_[v].get(LexKind::kTitle);
      if (t->attr("role") == "prefix") {
        p.prefix = t->normalized;
      } else {
        functions.push_back(t->normalized);
      }
      if (auto sex = t->attr("sex")) set_attr(attrs, "sex", std::string(*sex));
      ++titles;
      ++v;
    }
    if (!functions.empty()) p.function = text::join(functions, " ");

    std::size_t name_units = 0;
    if (v < units_.size()) {
      if (auto* e = units_[v].get(LexKind::kPersonName)) {
        p.given = attr_string(*e, "given");
        p.family = attr_string(*e, "family");
        if (!p.given && !p.family) p.family = e->normalized;
        if (auto sex = e->attr("sex")) set_attr(attrs, "sex", std::string(*sex));
        ++v;
        ++name_units;
      } else if (auto* g = units_[v].get(LexKind::kGivenName)) {
        p.given = g->normalized;
        if (auto sex = g->attr("sex")) set_attr(attrs, "sex", std::string(*sex));
        ++v;
        ++name_units;
        if (v < units_.size() && units_[v].raw() && is_initials(tok(units_[v].first).text.substr(
                                                        0, tok(units_[v].first).text.size() - 1)) &&
            tok(units_[v].first).text.ends_with(".")) {
          p.additional = tok(units_[v].first).text;
          ++v;
          ++name_units;
        }
        if (v < units_.size()) {
          if (auto* f = units_[v].get(LexKind::kFamilyName)) {
            p.family = f->normalized;
            ++v;
            ++name_units;
          } else if (capitalized_raw(units_[v])) {
            p.family = tok(units_[v].first).text;
            ++v;
            ++name_units;
          }
        }
      } else if (auto* f = units_[v].get(LexKind::kFamilyName)) {
        p.family = f->normalized;
        ++v;
        ++name_units;
      } else if (capitalized_raw(units_[v]) && (titles > 0 || learned(units_[v]))) {
        p.family = tok(units_[v].first).text;
        ++v;
        ++name_units;
      }
    }
    if (titles == 0 && name_units == 0) return false;
    if (name_units == 0 && !p.function) return false;  // bare "Mr."

    // A single lexicon unit keeps all of its readings ("Al Khartum").
    if (titles == 0 && name_units == 1 && !units_[u].raw()) return false;

    std::size_t last = units_[v - 1].last;
    remember(p);
    add_mention(units_[u].first, last, {EntityReading{EntityKind::kPerson, p, attrs}});
    next = v;
    return true;
  }

  bool learned(const Unit& unit) const {
    return memory_ && memory_->family_names.count(tok(unit.first).text);
  }

  bool plain(std::size_t u, std::size_t& next) {
    const Unit& unit = units_[u];
    if (unit.raw()) return false;
    std::vector<EntityReading> readings;
    bool pronoun = unit.has(LexKind::kPronoun);
    for (auto* e : unit.entries) {
      if (e->kind == LexKind::kNumberWord) continue;  // handled by try_quantity
      if (auto r = reading_of(*e)) add_unique(readings, std::move(*r));
    }
    for (const auto& r : readings)
      if (r.kind == EntityKind::kPerson) remember(std::get<Person>(r.value));
    if (readings.empty()) return false;
    add_mention(unit.first, unit.last, std::move(readings), pronoun);
    next = u + 1;
    return true;
  }

  // Noun groups grow to cover lexicon mentions that cross their edges.
  void widen_groups() {
    auto& groups = s_.noun_groups;
    for (const auto& m : s_.mentions) {
      if (m.readings.front().kind >= EntityKind::kNumber &&
          m.readings.front().kind != EntityKind::kDate)
        continue;
      std::size_t first = m.first, last = m.last;
      bool contained = false;
      std::vector<std::size_t> overlapping;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].first <= m.first && m.last <= groups[g].last) contained = true;
        if (groups[g].last >= m.first && groups[g].first <= m.last) overlapping.push_back(g);
      }
      if (contained) continue;
      for (auto g : overlapping) {
        first = std::min(first, groups[g].first);
        last = std::max(last, groups[g].last);
      }
      for (auto it = overlapping.rbegin(); it != overlapping.rend(); ++it)
        groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(*it));
      std::size_t head = last;
      for (std::size_t t = last + 1; t-- > first;)
        if (is_noun_pos(tok(t).pos) || tok(t).pos == Pos::kNum) {
          head = t;
          break;
        }
      NounGroup widened{first, last, head};
      auto pos = std::lower_bound(groups.begin(), groups.end(), widened,
                                  [](const NounGroup& a, const NounGroup& b) { return a.first < b.first; });
      groups.insert(pos, widened);
    }
  }

  SentenceParse& s_;
  const LexiconSet& lex_;
  DocumentMemory* memory_;
  std::vector<std::string> words_;
  std::vector<Unit> units_;
};

// --- coreference ----------------------------------------------------------------

std::string_view id_prefix(EntityKind k) {
  switch (k) {
    case EntityKind::kPerson: return "PERSON";
    case EntityKind::kLocation: return "LOC";
    case EntityKind::kOrganization: return "ORG";
    case EntityKind::kProduct: return "PRODUCT";
    case EntityKind::kNumber: return "NUM";
    case EntityKind::kPercent: return "PERCENT";
    case EntityKind::kMoney: return "MONEY";
    case EntityKind::kDuration: return "DURATION";
    case EntityKind::kTemperature: return "TEMP";
    case EntityKind::kSpeed: return "SPEED";
    case EntityKind::kDistance: return "DIST";
    case EntityKind::kDate: return "DATE";
  }
  return "ENTITY";
}

void fill_missing(Person& into, const Person& from) {
  for (auto member : {&Person::additional, &Person::country, &Person::email, &Person::family,
                      &Person::function, &Person::given, &Person::prefix, &Person::sex,
                      &Person::suffix, &Person::url})
    if (!(into.*member) && (from.*member)) into.*member = from.*member;
  if (!into.age) into.age = from.age;
}

struct Entity {
  std::string id;
  EntityReading merged;
  std::size_t last_seen = 0;  // global mention order
};

class Resolver {
 public:
  std::map<std::string, EntityReading> run(std::vector<SentenceParse>& sentences) {
    std::size_t order = 0;
    for (auto& s : sentences) {
      for (auto& m : s.mentions) {
        ++order;
        resolve(m, order);
      }
    }
    std::map<std::string, EntityReading> table;
    for (const auto& e : entities_) table.emplace(e.id, e.merged);
    return table;
  }

 private:
  std::string fresh(EntityKind kind) {
    auto prefix = std::string(id_prefix(kind));
    return prefix + std::to_string(++counters_[prefix]);
  }

  Entity& create(const EntityReading& r, std::size_t order) {
    entities_.push_back(Entity{fresh(r.kind), r, order});
    return entities_.back();
  }

  // Most recently mentioned entity first.
  std::vector<Entity*> recent(EntityKind kind) {
    std::vector<Entity*> out;
    for (auto& e : entities_)
      if (e.merged.kind == kind) out.push_back(&e);
    std::stable_sort(out.begin(), out.end(),
                     [](const Entity* a, const Entity* b) { return a->last_seen > b->last_seen; });
    return out;
  }

  void attach(EntityMention& m, Entity& e, std::size_t order) {
    m.resolved_id = e.id;
    e.last_seen = order;
    const EntityReading& r = m.readings.front();
    if (m.pronoun) return;
    if (r.kind == EntityKind::kPerson && e.merged.kind == EntityKind::kPerson) {
      fill_missing(std::get<Person>(e.merged.value), std::get<Person>(r.value));
      for (const auto& [k, v] : r.attributes)
        if (!sex_of(e.merged.attributes) || k != "sex") set_attr(e.merged.attributes, k, v);
    }
  }

  void resolve(EntityMention& m, std::size_t order) {
    const EntityReading& r = m.readings.front();
    if (m.pronoun) {
      auto candidates = recent(r.kind);
      auto sex = sex_of(r.attributes);
      std::vector<Entity*> agreeing;
      for (auto* e : candidates) {
        auto esex = sex_of(e->merged.attributes);
        if (!sex || !esex || *sex == *esex) agreeing.push_back(e);
      }
      if (agreeing.empty()) {
        auto& e = create(r, order);
        m.resolved_id = e.id;
        m.ambiguous = true;
        return;
      }
      m.ambiguous = agreeing.size() > 1;
      attach(m, *agreeing.front(), order);
      return;
    }

    switch (r.kind) {
      case EntityKind::kPerson: {
        const auto& p = std::get<Person>(r.value);
        auto people = recent(EntityKind::kPerson);
        // 1. exact full name
        if (p.given && p.family)
          for (auto* e : people) {
            const auto& q = std::get<Person>(e->merged.value);
            if (q.given == p.given && q.family == p.family) return attach(m, *e, order);
          }
        // 2. family name
        if (p.family)
          for (auto* e : people) {
            const auto& q = std::get<Person>(e->merged.value);
            if (q.family == p.family && (!p.given || !q.given || p.given == q.given))
              return attach(m, *e, order);
          }
        // 3. title
        if (!p.family && !p.given && p.function)
          for (auto* e : people) {
            const auto& q = std::get<Person>(e->merged.value);
            if (q.function == p.function) return attach(m, *e, order);
          }
        break;
      }
      case EntityKind::kLocation:
      case EntityKind::kOrganization:
      case EntityKind::kProduct:
        for (auto* e : recent(r.kind))
          if (e->merged.value == r.value) return attach(m, *e, order);
        break;
      default:
        break;
    }
    auto& e = create(r, order);
    m.resolved_id = e.id;
  }

  std::vector<Entity> entities_;
  std::map<std::string, int> counters_;
};

// --- debug rendering ----------------------------------------------------------------

struct Describer {
  std::vector<std::string> parts;
  template <class T>
  void operator()(std::string_view name, const T& member, const FieldSpec&) {
    if constexpr (detail::is_optional_v<T>) {
      if (!member) return;
      using V = typename T::value_type;
      if constexpr (std::is_same_v<V, std::string>) parts.push_back(std::string(name) + "=" + *member);
      else if constexpr (std::is_same_v<V, Decimal>)
        parts.push_back(std::string(name) + "=" + member->to_string());
      else if constexpr (std::is_same_v<V, std::int64_t>)
        parts.push_back(std::string(name) + "=" + std::to_string(*member));
    }
  }
};

template <class R>
std::string describe_record(const R& r) {
  Describer d;
  reflect(d, r);
  return text::join(d.parts, ",");
}

}  // namespace

std::string describe_reading(const EntityReading& r) {
  std::string out(entity_kind_name(r.kind));
  out += "(";
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Money>) {
          out += v.amount.to_string() + " " + v.currency;
        } else if constexpr (std::is_same_v<V, Quantity>) {
          out += v.value.to_string();
          if (!v.unit.empty()) out += " " + v.unit;
        } else if constexpr (std::is_same_v<V, std::string>) {
          out += v;
        } else {
          out += describe_record(v);
        }
      },
      r.value);
  if (!r.attributes.empty()) {
    std::vector<std::string> attrs;
    for (const auto& [k, v] : r.attributes) attrs.push_back(k + "=" + v);
    out += ";" + text::join(attrs, ",");
  }
  out += ")";
  return out;
}

void parse_entities(SentenceParse& sentence, const LexiconSet& lexicons, DocumentMemory* memory) {
  sentence.mentions.clear();
  EntityParser(sentence, lexicons, memory).run();
}

std::map<std::string, EntityReading> resolve_references(std::vector<SentenceParse>& sentences) {
  return Resolver().run(sentences);
}

DocumentParse analyze(std::string_view text, const LexiconSet& lexicons) {
  DocumentParse doc;
  doc.text = std::string(text);
  DocumentMemory memory;
  for (const auto& span : split_sentences(doc.text)) {
    SentenceParse s;
    s.source_span = span;
    s.tokens = tag_pos(doc.text, span);
    s.noun_groups = chunk_noun_groups(s.tokens);
    parse_entities(s, lexicons, &memory);
    doc.sentences.push_back(std::move(s));
  }
  doc.entities = resolve_references(doc.sentences);
  return doc;
}

std::string debug_dump(const DocumentParse& doc) {
  std::ostringstream out;
  for (std::size_t si = 0; si < doc.sentences.size(); ++si) {
    const auto& s = doc.sentences[si];
    out << "S\t" << si + 1 << "\t" << s.source_span.start << "\t" << s.source_span.end << "\n";
    for (const auto& t : s.tokens) out << t.start << "\t" << t.text << "\t" << pos_name(t.pos) << "\n";
    auto surface = [&](std::size_t first, std::size_t last) {
      return doc.text.substr(s.tokens[first].start, s.tokens[last].end - s.tokens[first].start);
    };
    for (const auto& g : s.noun_groups)
      out << "NG\t[" << surface(g.first, g.last) << "]\thead=" << s.tokens[g.head].text << "\n";
    for (const auto& m : s.mentions) {
      out << "M\t[" << surface(m.first, m.last) << "]\t" << m.resolved_id.value_or("-");
      if (m.ambiguous) out << "\tambiguous";
      for (const auto& r : m.readings) out << "\t" << describe_reading(r);
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace newsform
