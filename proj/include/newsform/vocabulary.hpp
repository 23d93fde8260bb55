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

#include <array>
#include <span>
#include <string_view>

// Closed vocabularies of the NewsForm element tables. Values are listed in
// table order; "Martial Arts" is carried as the token MartialArts.
namespace newsform::vocab {

inline constexpr std::array<std::string_view, 2> kSex = {
    "Female", "Male"};

inline constexpr std::array<std::string_view, 6> kContinent = {
    "Africa", "Antarctica", "Asia", "Europe", "NorthAmerica", "SouthAmerica"};

inline constexpr std::array<std::string_view, 43> kSport = {
    "Archery", "AutoRacing", "Badminton", "Baseball", "Basketball", "Biathlon",
    "Boating", "Bobsledding", "Boxing", "Cricket", "Curling", "Cycling",
    "ExtremeSports", "Fencing", "Fishing", "Football", "Golf", "Gymnastics",
    "HighJump", "Hockey", "HorseRacing", "Javelin", "LongJump", "MartialArts",
    "Olympics", "PoleVault", "Rodeo", "Rowing", "Rugby", "Running", "ShotPut",
    "Snowboarding", "Soccer", "Softball", "Sport", "Tennis", "Track",
    "Triathlon", "Volleyball", "WaterSports", "Weightlifting", "WinterSports",
    "Wrestling"};

inline constexpr std::array<std::string_view, 3> kCompetitionOutcome = {
    "Loss", "Tie", "Win"};

inline constexpr std::array<std::string_view, 6> kDealStatus = {
    "Rumored", "InTalks", "Agreed", "Approved", "Completed", "Failed"};

inline constexpr std::array<std::string_view, 2> kGoodBad = {
    "Good", "Bad"};

inline constexpr std::array<std::string_view, 3> kDirection = {
    "Down", "Unchanged", "Up"};

inline constexpr std::array<std::string_view, 3> kFedAction = {
    "Hold", "Lower", "Raise"};

inline constexpr std::array<std::string_view, 18> kInterestRate = {
    "1MCommercialPaperRate", "3MCommercialPaperRate", "6MCommercialPaperRate",
    "BaseRate", "CommercialPaperRate", "DiscountRate", "FederalFundsRate",
    "FederalFundsTarget", "InterestRate", "PrimeRate", "TBill", "TBill1Y",
    "TBill3M", "TBill6M", "TBond30Y", "TNote2Y", "TNote5Y", "TNote10Y"};

inline constexpr std::array<std::string_view, 17> kBoat = {
    "Battleship", "Boat", "CabinCruiser", "Cruiser", "Dinghy",
    "InflatableDinghy", "LifeRaft", "Lifeboat", "PassengerShip", "Powerboat",
    "Raft", "Ship", "SmallBoat", "Steamship", "Vessel", "Warship", "Windsurfer"};

inline constexpr std::array<std::string_view, 18> kCause = {
    "AerialBomb", "Alert", "BoatCollision", "Bomb", "CarCrash", "Curfew",
    "Disaster", "Dynamite", "Earthquake", "Evacuation", "Explosive", "Fire",
    "Firebomb", "Grenade", "Mine", "MolotovCocktail", "PlaneCrash",
    "VehicleBomb"};

inline constexpr std::array<std::string_view, 12> kJointVentureType = {
    "Agreement", "Alliance", "Deal", "DistributionAgreement", "LaunchContract",
    "LicensingAgreement", "MarketingAlliance", "Partnership",
    "PromotionAgreement", "Relationship", "StrategicAlliance", "Venture"};

inline constexpr std::array<std::string_view, 25> kAccusationAction = {
    "AggravatedAssault", "Assassination", "Assault", "CapitalMurder",
    "Conspiracy", "ConspiringToKill", "Crime", "DisorderlyConduct",
    "FirstDegreeMurder", "Genocide", "Harassment", "InvoluntaryManslaughter",
    "Manslaughter", "Massacre", "Murder", "ObstructionOfJustice",
    "PremeditatedMurder", "RacialHarassment", "Rape", "SecondDegreeMurder",
    "SexualAssault", "SexualHarassment", "Slaughter", "Torture", "Wrongdoing"};

inline constexpr std::array<std::string_view, 10> kDispositionMethod = {
    "CourtTrial", "JuryTrial", "SummaryJudgment", "ConsentJudgment",
    "DefaultJudgment", "DirectedVerdict", "ArbitrationAward", "Settlement",
    "Dismissal", "Transfer"};

inline constexpr std::array<std::string_view, 2> kGuiltyInnocent = {
    "Guilty", "Innocent"};

inline constexpr std::array<std::string_view, 10> kLegalAction = {
    "Argue", "Arrest", "Charge", "File", "Judge", "Plead", "Release",
    "Sentence", "Settle", "Testify"};

inline constexpr std::array<std::string_view, 5> kLegalFiling = {
    "Complaint", "Motion", "ObscenityComplaint", "Pleading", "Suit"};

inline constexpr std::array<std::string_view, 7> kSentenceType = {
    "Execution", "Jail", "JailLife", "JailLifeWithoutPossibleParole",
    "JailLifeWithPossibleParole", "Probation", "StateCustody"};

inline constexpr std::array<std::string_view, 23> kIllnessFactor = {
    "AirPollution", "Alcohol", "AnabolicSteroids", "BreastImplant",
    "CigarSmoking", "CigaretteSmoking", "Circumcision", "Cocaine",
    "Contraception", "ContraceptivePill", "Dieting", "Ecstasy", "Heroin",
    "Hysterectomy", "Immunization", "LSD", "Mescaline", "Opium", "Pollution",
    "Smoking", "Stress", "Tobacco", "Vaccination"};

inline constexpr std::array<std::string_view, 10> kAgreement = {
    "Accord", "Agreement", "FinalSettlement", "Legislation", "Measure",
    "PeaceAgreement", "PeaceDeal", "PeaceTreaty", "Settlement", "Treaty"};

inline constexpr std::array<std::string_view, 3> kNegotiationStatus = {
    "AgreementReached", "InitialTalks", "Talks"};

inline constexpr std::array<std::string_view, 2> kProductStatus = {
    "Released", "Recalled"};

inline constexpr std::array<std::string_view, 16> kLegislation = {
    "Amendment", "Bill", "ConcurrentResolution", "CongressionalJointResolution",
    "HouseAmendment", "HouseBill", "HouseConcurrentResolution",
    "HouseJointResolution", "HouseResolution", "JointResolution", "Resolution",
    "SenateAmendment", "SenateBill", "SenateConcurrentResolution",
    "SenateJointResolution", "SenateResolution"};

inline constexpr std::array<std::string_view, 4> kVoteStatus = {
    "Passed", "Rejected", "Signed", "VetoThreat"};

inline constexpr std::array<std::string_view, 25> kArmedConflict = {
    "AirBattle", "AirStrike", "ArmedConflict", "ArtilleryFire", "Attack",
    "Battle", "Bombing", "CivilUnrest", "CivilWar", "Clash", "Conflict", "Coup",
    "Fighting", "Fire", "GuerrillaActivities", "Hostilities", "LandBattle",
    "LandWar", "Massacre", "Skirmish", "SniperFire", "Unrest", "Violence",
    "War", "Warfare"};

inline constexpr std::array<std::string_view, 5> kArmedForceAction = {
    "Arrive", "Begin", "Depart", "Deploy", "Movement"};

inline constexpr std::array<std::string_view, 2> kVictimAction = {
    "Flee", "Return"};

inline constexpr std::array<std::string_view, 8> kCompassDirection = {
    "East", "North", "Northeast", "Northwest", "South", "Southeast",
    "Southwest", "West"};

inline constexpr std::array<std::string_view, 4> kDeclaredState = {
    "Alert", "Disaster", "Evacuation", "Fire"};

inline constexpr std::array<std::string_view, 46> kMeteor = {
    "Category1Storm", "Category2Storm", "Category3Storm", "Category4Storm",
    "ContinuousDrizzle", "ContinuousRain", "ContinuousSnow", "Cyclone", "Dew",
    "Drizzle", "DustStorm", "ExcessiveHeat", "Fog", "FreezingRain", "Frost",
    "Hail", "Heat", "HeavyDriftingSnowLow", "HeavyThunderstorm", "Hurricane",
    "IntermittentDrizzle", "IntermittentRain", "IntermittentSnow", "Lightning",
    "Mist", "PlateCrystal", "Rain", "RainShower", "Raindrop", "Rainstorm",
    "Sandstorm", "Sleet", "SlightDriftingSnowLow", "Smoke", "Snow",
    "SnowFlurry", "SnowShower", "Snowflake", "Snowstorm", "Squall",
    "StellarCrystal", "Storm", "Thunder", "Thunderstorm", "Tornado",
    "TropicalStorm"};

}  // namespace newsform::vocab
