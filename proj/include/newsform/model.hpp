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

#pragma once

// Typed NewsForm documents.
//
// Every record type exposes its children through reflect(visitor, record). A
// visitor is any callable accepting (element name, member reference, FieldSpec),
// where the member is one of:
//
//   std::optional<std::string>     text, open token, closed enum or code leaf
//   std::optional<std::int64_t>    integer leaf
//   std::optional<Decimal>         decimal leaf
//   std::optional<UtcTime>         timestamp leaf
//   std::optional<R>               nested record (Person, Location, ...)
//   std::vector<R>                 repeated nested record
//
// Children are reflected in canonical output order. The codec, validator,
// corpus index and fragment merger are all written against this protocol.

#include <chrono>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "newsform/decimal.hpp"
#include "newsform/vocabulary.hpp"

namespace newsform {

using UtcTime = std::chrono::sys_seconds;
using Text = std::optional<std::string>;
using Integer = std::optional<std::int64_t>;
using OptDecimal = std::optional<Decimal>;

// Basic-format UTC timestamps as used in DatelineTime: YYYYMMDDTHHMMSSZ.
std::string format_basic_utc(UtcTime t);
std::optional<UtcTime> parse_basic_utc(std::string_view text);

enum class LeafKind {
  kText,      // free text
  kToken,     // open vocabulary: [A-Za-z][A-Za-z0-9]*
  kEnum,      // closed vocabulary
  kCountry,   // ISO 3166 alpha-3
  kState,     // USPS two-letter code
  kCurrency,  // ISO 4217 alpha-3
  kTicker,    // exchange ticker
  kInteger,
  kDecimal,
  kTime,
  kRecord,    // nested record; bounds and vocabularies do not apply
};

struct DecimalBound {
  Decimal value;
  bool inclusive = true;
};

struct FieldSpec {
  LeafKind kind = LeafKind::kText;
  std::string_view vocab_name;
  std::span<const std::string_view> vocab;
  std::optional<std::int64_t> min_int;
  std::optional<std::int64_t> max_int;
  std::optional<DecimalBound> lower;
  std::optional<DecimalBound> upper;
};

namespace spec {

inline constexpr FieldSpec kText{};
inline constexpr FieldSpec kToken{.kind = LeafKind::kToken};
inline constexpr FieldSpec kCountry{.kind = LeafKind::kCountry};
inline constexpr FieldSpec kState{.kind = LeafKind::kState};
inline constexpr FieldSpec kCurrency{.kind = LeafKind::kCurrency};
inline constexpr FieldSpec kTicker{.kind = LeafKind::kTicker};
inline constexpr FieldSpec kTime{.kind = LeafKind::kTime};
inline constexpr FieldSpec kRecord{.kind = LeafKind::kRecord};
inline constexpr FieldSpec kDecimal{.kind = LeafKind::kDecimal};
inline constexpr FieldSpec kCount{.kind = LeafKind::kInteger, .min_int = 0};
inline constexpr FieldSpec kPositiveCount{.kind = LeafKind::kInteger, .min_int = 1};
inline constexpr FieldSpec kAge{.kind = LeafKind::kInteger, .min_int = 0, .max_int = 150};
inline constexpr FieldSpec kLatitude{.kind = LeafKind::kDecimal,
                                     .lower = DecimalBound{Decimal(-90)},
                                     .upper = DecimalBound{Decimal(90)}};
inline constexpr FieldSpec kLongitude{.kind = LeafKind::kDecimal,
                                      .lower = DecimalBound{Decimal(-180)},
                                      .upper = DecimalBound{Decimal(180)}};
// Percentage stake: (0, 100].
inline constexpr FieldSpec kStake{.kind = LeafKind::kDecimal,
                                  .lower = DecimalBound{Decimal(0), false},
                                  .upper = DecimalBound{Decimal(100)}};
inline constexpr FieldSpec kPositiveDecimal{.kind = LeafKind::kDecimal,
                                            .lower = DecimalBound{Decimal(0), false}};

template <std::size_t N>
constexpr FieldSpec closed(std::string_view name, const std::array<std::string_view, N>& values) {
  return FieldSpec{.kind = LeafKind::kEnum, .vocab_name = name, .vocab = values};
}

}  // namespace spec

template <class Self, class T>
concept SelfOf = std::same_as<std::remove_const_t<Self>, T>;

// ---------------------------------------------------------------------------
// Shared records

struct Money {
  Decimal amount;
  std::string currency;
  bool operator==(const Money&) const = default;
};

// Decimal quantity with an optional unit token (temperatures, speeds,
// distances in Weather).
struct Measure {
  Decimal amount;
  Text unit;
  bool operator==(const Measure&) const = default;
};

struct Person {
  Text additional;
  Integer age;
  Text country;
  Text email;
  Text family;
  Text function;
  Text given;
  Text prefix;
  Text sex;
  Text suffix;
  Text url;
  bool operator==(const Person&) const = default;
};

struct Location {
  Text city;
  Text continent;
  Text country;
  OptDecimal latitude;
  OptDecimal longitude;
  Text region;
  Text state;
  Text url;
  bool operator==(const Location&) const = default;
};

struct Organization {
  Text email;
  Text full_name;
  Text nickname;
  Text organization_type;
  Text sport;
  Text ticker;
  Text url;
  bool operator==(const Organization&) const = default;
};

// "Organization or Person" children. On the wire the two are told apart by
// their child element names.
using Party = std::variant<Person, Organization>;

template <class V, SelfOf<Money> M>
void reflect(V& v, M& m) {
  v("Amount", m.amount, spec::kDecimal);
  v("Currency", m.currency, spec::kCurrency);
}

template <class V, SelfOf<Measure> M>
void reflect(V& v, M& m) {
  v("Amount", m.amount, spec::kDecimal);
  v("Unit", m.unit, spec::kToken);
}

template <class V, SelfOf<Person> P>
void reflect(V& v, P& p) {
  v("Additional", p.additional, spec::kText);
  v("Age", p.age, spec::kAge);
  v("Country", p.country, spec::kCountry);
  v("Email", p.email, spec::kText);
  v("Family", p.family, spec::kText);
  v("Function", p.function, spec::kText);
  v("Given", p.given, spec::kText);
  v("Prefix", p.prefix, spec::kText);
  v("Sex", p.sex, spec::closed("Sex", vocab::kSex));
  v("Suffix", p.suffix, spec::kText);
  v("URL", p.url, spec::kText);
}

template <class V, SelfOf<Location> L>
void reflect(V& v, L& l) {
  v("City", l.city, spec::kText);
  v("Continent", l.continent, spec::closed("Continent", vocab::kContinent));
  v("Country", l.country, spec::kCountry);
  v("Latitude", l.latitude, spec::kLatitude);
  v("Longitude", l.longitude, spec::kLongitude);
  v("Region", l.region, spec::kText);
  v("State", l.state, spec::kState);
  v("URL", l.url, spec::kText);
}

template <class V, SelfOf<Organization> O>
void reflect(V& v, O& o) {
  v("Email", o.email, spec::kText);
  v("FullName", o.full_name, spec::kText);
  v("Nickname", o.nickname, spec::kText);
  v("OrganizationType", o.organization_type, spec::kToken);
  v("Sport", o.sport, spec::closed("Sport", vocab::kSport));
  v("Ticker", o.ticker, spec::kTicker);
  v("URL", o.url, spec::kText);
}

// ---------------------------------------------------------------------------
// Event records

struct Competition {
  static constexpr std::string_view kName = "Competition";
  Text competition_code;
  Text competition_outcome;
  std::optional<Person> player;
  Text sport;
  std::optional<Organization> team;
  bool operator==(const Competition&) const = default;
};

struct Deal {
  static constexpr std::string_view kName = "Deal";
  std::optional<Organization> acquirer;
  std::optional<Organization> advisor;
  Text deal_status;
  std::optional<Money> deal_value;
  std::optional<Money> share_price;
  OptDecimal stake;
  OptDecimal stock_ratio;
  std::optional<Organization> successor;
  std::optional<Organization> survivor;
  std::optional<Organization> target;
  bool operator==(const Deal&) const = default;
};

struct Earnings {
  static constexpr std::string_view kName = "Earnings";
  std::optional<Organization> company;
  std::optional<Money> eps;
  std::optional<Money> earnings_amount;
  Text good_bad;
  std::optional<Money> loss;
  std::optional<Money> previous_eps;
  std::optional<Money> previous_earnings;
  std::optional<Money> sales;
  std::optional<Money> sales_ps;
  bool operator==(const Earnings&) const = default;
};

struct EconomicRelease {
  static constexpr std::string_view kName = "EconomicRelease";
  OptDecimal annual_rate;
  Text direction;
  Text economic_release_type;
  std::optional<Money> growth;
  OptDecimal growth_rate;
  OptDecimal previous_rate;
  OptDecimal rate;
  std::optional<Party> source;
  bool operator==(const EconomicRelease&) const = default;
};

struct FedWatch {
  static constexpr std::string_view kName = "FedWatch";
  std::optional<Organization> actor;
  Text fed_action;
  Text interest_rate;
  OptDecimal rate;
  bool operator==(const FedWatch&) const = default;
};

struct IPO {
  static constexpr std::string_view kName = "IPO";
  std::optional<Organization> company;
  std::optional<Money> market_cap;
  std::optional<Money> raised;
  Integer shares;
  OptDecimal stake;
  bool operator==(const IPO&) const = default;
};

struct InjuryFatality {
  static constexpr std::string_view kName = "InjuryFatality";
  Text accident_car;
  Text accident_plane;
  Text boat;
  Text cause;
  Text cause_event;
  std::vector<Person> hospitalized;
  std::vector<Person> injured;
  Integer injured_count;
  std::vector<Person> killed;
  Integer killed_count;
  Text landed_plane;
  std::optional<Party> source;
  Text survived_by;
  std::optional<Location> at_location;
  bool operator==(const InjuryFatality&) const = default;
};

struct JointVenture {
  static constexpr std::string_view kName = "JointVenture";
  std::vector<Organization> company;
  Text item;
  Text joint_venture_type;
  std::optional<Party> source;
  bool operator==(const JointVenture&) const = default;
};

struct LegalEvent {
  static constexpr std::string_view kName = "LegalEvent";
  Text accusation_action;
  std::optional<Party> accused;
  std::optional<Party> accuser;
  std::optional<Party> arbiter;
  std::optional<Person> arrested;
  std::optional<Person> attorney;
  std::optional<Money> award;
  Text disposition_method;
  std::optional<Organization> forum;
  Text judgment;
  Text legal_action;
  Text legal_filing;
  Text plea;
  std::optional<Person> released;
  std::optional<Party> releaser;
  Text sentence_duration;
  Text sentence_type;
  std::optional<Person> witness;
  bool operator==(const LegalEvent&) const = default;
};

struct MedicalFinding {
  static constexpr std::string_view kName = "MedicalFinding";
  Text illness;
  Text illness_factor;
  bool operator==(const MedicalFinding&) const = default;
};

struct Negotiation {
  static constexpr std::string_view kName = "Negotiation";
  Text agreement;
  Text negotiation_status;
  std::optional<Person> negotiator;
  std::vector<Party> party;
  bool operator==(const Negotiation&) const = default;
};

struct NewProduct {
  static constexpr std::string_view kName = "NewProduct";
  std::optional<Organization> company;
  Text item;
  std::optional<Money> price;
  Text product_status;
  std::optional<Party> source;
  Text support_for;
  bool operator==(const NewProduct&) const = default;
};

struct Succession {
  static constexpr std::string_view kName = "Succession";
  std::optional<Party> employer;
  Text function;
  std::optional<Person> person_in;
  std::optional<Person> person_out;
  std::optional<Party> source;
  bool operator==(const Succession&) const = default;
};

struct Trip {
  static constexpr std::string_view kName = "Trip";
  std::optional<Party> host;
  std::optional<Location> to_location;
  std::optional<Person> visitor;
  Integer visitor_count;
  bool operator==(const Trip&) const = default;
};

struct Vote {
  static constexpr std::string_view kName = "Vote";
  Integer against;
  Integer in_favor;
  Text law;
  Text legislation;
  std::optional<Person> signer;
  Text vote_status;
  std::optional<Organization> voting_body;
  bool operator==(const Vote&) const = default;
};

struct War {
  static constexpr std::string_view kName = "War";
  Text armed_conflict;
  Text armed_force;
  Text armed_force_action;
  std::optional<Location> at_location;
  std::optional<Party> leader;
  std::optional<Party> source;
  Text victim;
  Text victim_action;
  bool operator==(const War&) const = default;
};

struct Weather {
  static constexpr std::string_view kName = "Weather";
  std::optional<Location> at_location;
  Text compass_direction;
  Text declared_state;
  std::optional<Party> declarer;
  std::optional<Measure> distance_from_location;
  Text given;
  std::optional<Measure> high;
  std::optional<Party> issuer;
  std::optional<Measure> low;
  Text meteor;
  Text warning;
  std::optional<Measure> wind_speed;
  bool operator==(const Weather&) const = default;
};

template <class V, SelfOf<Competition> E>
void reflect(V& v, E& e) {
  v("CompetitionCode", e.competition_code, spec::kToken);
  v("CompetitionOutcome", e.competition_outcome,
    spec::closed("CompetitionOutcome", vocab::kCompetitionOutcome));
  v("Player", e.player, spec::kRecord);
  v("Sport", e.sport, spec::closed("Sport", vocab::kSport));
  v("Team", e.team, spec::kRecord);
}

template <class V, SelfOf<Deal> E>
void reflect(V& v, E& e) {
  v("Acquirer", e.acquirer, spec::kRecord);
  v("Advisor", e.advisor, spec::kRecord);
  v("DealStatus", e.deal_status, spec::closed("DealStatus", vocab::kDealStatus));
  v("DealValue", e.deal_value, spec::kRecord);
  v("SharePrice", e.share_price, spec::kRecord);
  v("Stake", e.stake, spec::kStake);
  v("StockRatio", e.stock_ratio, spec::kPositiveDecimal);
  v("Successor", e.successor, spec::kRecord);
  v("Survivor", e.survivor, spec::kRecord);
  v("Target", e.target, spec::kRecord);
}

template <class V, SelfOf<Earnings> E>
void reflect(V& v, E& e) {
  v("Company", e.company, spec::kRecord);
  v("EPS", e.eps, spec::kRecord);
  v("EarningsAmount", e.earnings_amount, spec::kRecord);
  v("GoodBad", e.good_bad, spec::closed("GoodBad", vocab::kGoodBad));
  v("Loss", e.loss, spec::kRecord);
  v("PreviousEPS", e.previous_eps, spec::kRecord);
  v("PreviousEarnings", e.previous_earnings, spec::kRecord);
  v("Sales", e.sales, spec::kRecord);
  v("SalesPS", e.sales_ps, spec::kRecord);
}

template <class V, SelfOf<EconomicRelease> E>
void reflect(V& v, E& e) {
  v("AnnualRate", e.annual_rate, spec::kDecimal);
  v("Direction", e.direction, spec::closed("Direction", vocab::kDirection));
  v("EconomicReleaseType", e.economic_release_type, spec::kToken);
  v("Growth", e.growth, spec::kRecord);
  v("GrowthRate", e.growth_rate, spec::kDecimal);
  v("PreviousRate", e.previous_rate, spec::kDecimal);
  v("Rate", e.rate, spec::kDecimal);
  v("Source", e.source, spec::kRecord);
}

template <class V, SelfOf<FedWatch> E>
void reflect(V& v, E& e) {
  v("Actor", e.actor, spec::kRecord);
  v("FedAction", e.fed_action, spec::closed("FedAction", vocab::kFedAction));
  v("InterestRate", e.interest_rate, spec::closed("InterestRate", vocab::kInterestRate));
  v("Rate", e.rate, spec::kDecimal);
}

template <class V, SelfOf<IPO> E>
void reflect(V& v, E& e) {
  v("Company", e.company, spec::kRecord);
  v("MarketCap", e.market_cap, spec::kRecord);
  v("Raised", e.raised, spec::kRecord);
  v("Shares", e.shares, spec::kPositiveCount);
  v("Stake", e.stake, spec::kStake);
}

template <class V, SelfOf<InjuryFatality> E>
void reflect(V& v, E& e) {
  v("AccidentCar", e.accident_car, spec::kText);
  v("AccidentPlane", e.accident_plane, spec::kText);
  v("Boat", e.boat, spec::closed("Boat", vocab::kBoat));
  v("Cause", e.cause, spec::closed("Cause", vocab::kCause));
  v("CauseEvent", e.cause_event, spec::kText);
  v("Hospitalized", e.hospitalized, spec::kRecord);
  v("Injured", e.injured, spec::kRecord);
  v("InjuredCount", e.injured_count, spec::kCount);
  v("Killed", e.killed, spec::kRecord);
  v("KilledCount", e.killed_count, spec::kCount);
  v("LandedPlane", e.landed_plane, spec::kText);
  v("Source", e.source, spec::kRecord);
  v("SurvivedBy", e.survived_by, spec::kText);
  v("AtLocation", e.at_location, spec::kRecord);
}

template <class V, SelfOf<JointVenture> E>
void reflect(V& v, E& e) {
  v("Company", e.company, spec::kRecord);
  v("Item", e.item, spec::kText);
  v("JointVentureType", e.joint_venture_type,
    spec::closed("JointVentureType", vocab::kJointVentureType));
  v("Source", e.source, spec::kRecord);
}

template <class V, SelfOf<LegalEvent> E>
void reflect(V& v, E& e) {
  v("AccusationAction", e.accusation_action,
    spec::closed("AccusationAction", vocab::kAccusationAction));
  v("Accused", e.accused, spec::kRecord);
  v("Accuser", e.accuser, spec::kRecord);
  v("Arbiter", e.arbiter, spec::kRecord);
  v("Arrested", e.arrested, spec::kRecord);
  v("Attorney", e.attorney, spec::kRecord);
  v("Award", e.award, spec::kRecord);
  v("DispositionMethod", e.disposition_method,
    spec::closed("DispositionMethod", vocab::kDispositionMethod));
  v("Forum", e.forum, spec::kRecord);
  v("Judgment", e.judgment, spec::closed("Judgment", vocab::kGuiltyInnocent));
  v("LegalAction", e.legal_action, spec::closed("LegalAction", vocab::kLegalAction));
  v("LegalFiling", e.legal_filing, spec::closed("LegalFiling", vocab::kLegalFiling));
  v("Plea", e.plea, spec::closed("Plea", vocab::kGuiltyInnocent));
  v("Released", e.released, spec::kRecord);
  v("Releaser", e.releaser, spec::kRecord);
  v("SentenceDuration", e.sentence_duration, spec::kText);
  v("SentenceType", e.sentence_type, spec::closed("SentenceType", vocab::kSentenceType));
  v("Witness", e.witness, spec::kRecord);
}

template <class V, SelfOf<MedicalFinding> E>
void reflect(V& v, E& e) {
  v("Illness", e.illness, spec::kToken);
  v("IllnessFactor", e.illness_factor, spec::closed("IllnessFactor", vocab::kIllnessFactor));
}

template <class V, SelfOf<Negotiation> E>
void reflect(V& v, E& e) {
  v("Agreement", e.agreement, spec::closed("Agreement", vocab::kAgreement));
  v("NegotiationStatus", e.negotiation_status,
    spec::closed("NegotiationStatus", vocab::kNegotiationStatus));
  v("Negotiator", e.negotiator, spec::kRecord);
  v("Party", e.party, spec::kRecord);
}

template <class V, SelfOf<NewProduct> E>
void reflect(V& v, E& e) {
  v("Company", e.company, spec::kRecord);
  v("Item", e.item, spec::kText);
  v("Price", e.price, spec::kRecord);
  v("ProductStatus", e.product_status, spec::closed("ProductStatus", vocab::kProductStatus));
  v("Source", e.source, spec::kRecord);
  v("SupportFor", e.support_for, spec::kText);
}

template <class V, SelfOf<Succession> E>
void reflect(V& v, E& e) {
  v("Employer", e.employer, spec::kRecord);
  v("Function", e.function, spec::kText);
  v("In", e.person_in, spec::kRecord);
  v("Out", e.person_out, spec::kRecord);
  v("Source", e.source, spec::kRecord);
}

template <class V, SelfOf<Trip> E>
void reflect(V& v, E& e) {
  v("Host", e.host, spec::kRecord);
  v("ToLocation", e.to_location, spec::kRecord);
  v("Visitor", e.visitor, spec::kRecord);
  v("VisitorCount", e.visitor_count, spec::kCount);
}

template <class V, SelfOf<Vote> E>
void reflect(V& v, E& e) {
  v("Against", e.against, spec::kCount);
  v("InFavor", e.in_favor, spec::kCount);
  v("Law", e.law, spec::kText);
  v("Legislation", e.legislation, spec::closed("Legislation", vocab::kLegislation));
  v("Signer", e.signer, spec::kRecord);
  v("VoteStatus", e.vote_status, spec::closed("VoteStatus", vocab::kVoteStatus));
  v("VotingBody", e.voting_body, spec::kRecord);
}

template <class V, SelfOf<War> E>
void reflect(V& v, E& e) {
  v("ArmedConflict", e.armed_conflict, spec::closed("ArmedConflict", vocab::kArmedConflict));
  v("ArmedForce", e.armed_force, spec::kText);
  v("ArmedForceAction", e.armed_force_action,
    spec::closed("ArmedForceAction", vocab::kArmedForceAction));
  v("AtLocation", e.at_location, spec::kRecord);
  v("Leader", e.leader, spec::kRecord);
  v("Source", e.source, spec::kRecord);
  v("Victim", e.victim, spec::kText);
  v("VictimAction", e.victim_action, spec::closed("VictimAction", vocab::kVictimAction));
}

template <class V, SelfOf<Weather> E>
void reflect(V& v, E& e) {
  v("AtLocation", e.at_location, spec::kRecord);
  v("CompassDirection", e.compass_direction,
    spec::closed("CompassDirection", vocab::kCompassDirection));
  v("DeclaredState", e.declared_state, spec::closed("DeclaredState", vocab::kDeclaredState));
  v("Declarer", e.declarer, spec::kRecord);
  v("DistanceFromLocation", e.distance_from_location, spec::kRecord);
  v("Given", e.given, spec::kText);
  v("High", e.high, spec::kRecord);
  v("Issuer", e.issuer, spec::kRecord);
  v("Low", e.low, spec::kRecord);
  v("Meteor", e.meteor, spec::closed("Meteor", vocab::kMeteor));
  v("Warning", e.warning, spec::kText);
  v("WindSpeed", e.wind_speed, spec::kRecord);
}

// ---------------------------------------------------------------------------
// Documents

using NewsEvent =
    std::variant<Competition, Deal, Earnings, EconomicRelease, FedWatch, IPO, InjuryFatality,
                 JointVenture, LegalEvent, MedicalFinding, Negotiation, NewProduct, Succession,
                 Trip, Vote, War, Weather>;

inline constexpr std::size_t kEventKindCount = std::variant_size_v<NewsEvent>;

std::string_view event_name(const NewsEvent& event);
std::string_view event_name(std::size_t kind_index);
std::optional<std::size_t> event_kind(std::string_view name);
NewsEvent make_event(std::size_t kind_index);

// Canonical element name order for the 17 event kinds (variant index order).
std::span<const std::string_view> event_names();

struct Head {
  std::optional<UtcTime> dateline_time;
  bool operator==(const Head&) const = default;
};

template <class V, SelfOf<Head> H>
void reflect(V& v, H& h) {
  v("DatelineTime", h.dateline_time, spec::kTime);
}

struct NewsForm {
  Head head;
  std::vector<NewsEvent> events;
  bool operator==(const NewsForm&) const = default;
};

// Party child names that only one alternative carries.
bool is_person_only_child(std::string_view name);
bool is_organization_only_child(std::string_view name);

}  // namespace newsform
