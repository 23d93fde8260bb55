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

#include <gtest/gtest.h>

#include "newsform/codec.hpp"
#include "newsform/xml.hpp"
#include "support.hpp"

using namespace newsform;
using namespace newsform::testing;

namespace {

ParseError parse_failure(const std::string& text) {
  try {
    parse_newsform(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "document parsed: " << text;
  return ParseError({});
}

}  // namespace

TEST(Codec, ExampleRoundTripsByteForByte) {
  std::string original = read_file(test_data() / "earthquake.newsform.xml");
  NewsForm form = parse_newsform(original);
  EXPECT_EQ(serialize_newsform(form), original);
}

TEST(Codec, ExampleDecodesToTypedFields) {
  NewsForm form = parse_newsform(read_file(test_data() / "earthquake.newsform.xml"));
  EXPECT_EQ(format_basic_utc(*form.head.dateline_time), "19990125T181917Z");
  ASSERT_EQ(form.events.size(), 1u);
  const auto& e = std::get<InjuryFatality>(form.events[0]);
  EXPECT_EQ(e.cause, "Earthquake");
  EXPECT_EQ(e.killed_count, 143);
  EXPECT_EQ(e.injured_count, 900);
  ASSERT_TRUE(e.source);
  EXPECT_EQ(std::get<Person>(*e.source).function, "Civil Defense Official");
  EXPECT_EQ(e.at_location->country, "COL");
  EXPECT_EQ(e.at_location->latitude->to_string(), "4.29");
  EXPECT_EQ(e.at_location->longitude->to_string(), "-75.68");
}

TEST(Codec, GeneratedDocumentsRoundTrip) {
  DocGenerator gen(20260101);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    NewsForm doc = gen.document(5);
    std::string xml = serialize_newsform(doc);
    NewsForm back = parse_newsform(xml);
    if (!(back == doc)) {
      ++failures;
      ADD_FAILURE() << "document " << i << " changed:\n" << xml;
    }
    EXPECT_EQ(serialize_newsform(back), xml) << "serialization not stable for document " << i;
  }
  EXPECT_EQ(failures, 0);
}

TEST(Codec, CanonicalisesNonCanonicalInput) {
  std::string messy =
      "<?xml version=\"1.0\"?>\n<!-- c --><NewsForm><InjuryFatality><KilledCount>3</KilledCount>"
      "<Cause>Fire</Cause></InjuryFatality><Head/></NewsForm>";
  std::string canonical = serialize_newsform(parse_newsform(messy));
  EXPECT_EQ(canonical,
            "<NewsForm>\n  <Head/>\n  <InjuryFatality>\n    <Cause>Fire</Cause>\n    <KilledCount>3</KilledCount>\n"
            "  </InjuryFatality>\n</NewsForm>\n");
  EXPECT_EQ(serialize_newsform(parse_newsform(canonical)), canonical);
}

TEST(Codec, EscapesText) {
  NewsForm doc;
  NewProduct p;
  p.item = "R&D <beta> \"x\"";
  doc.events.push_back(p);
  std::string xml = serialize_newsform(doc);
  EXPECT_NE(xml.find("R&amp;D &lt;beta&gt;"), std::string::npos);
  EXPECT_EQ(parse_newsform(xml), doc);
}

TEST(Codec, SyntaxErrorStopsReading) {
  auto e = parse_failure("<NewsForm><Head></NewsForm>");
  ASSERT_EQ(e.diagnostics().size(), 1u);
  EXPECT_EQ(e.diagnostics()[0].kind, DiagnosticKind::kSyntax);
  EXPECT_GT(e.diagnostics()[0].line, 0);
}

TEST(Codec, UnknownElementIsASchemaError) {
  auto e = parse_failure("<NewsForm><InjuryFatality><Harmed>3</Harmed></InjuryFatality></NewsForm>");
  ASSERT_EQ(e.diagnostics().size(), 1u);
  EXPECT_EQ(e.diagnostics()[0].kind, DiagnosticKind::kSchema);
  EXPECT_EQ(e.diagnostics()[0].path, "InjuryFatality/Harmed");
}

TEST(Codec, WrongLeafTypeIsATypeError) {
  auto e = parse_failure(
      "<NewsForm><InjuryFatality><KilledCount>many</KilledCount><AtLocation><Latitude>north</Latitude>"
      "</AtLocation></InjuryFatality></NewsForm>");
  ASSERT_EQ(e.diagnostics().size(), 2u);
  EXPECT_EQ(e.diagnostics()[0].kind, DiagnosticKind::kType);
  EXPECT_EQ(e.diagnostics()[0].path, "InjuryFatality/KilledCount");
  EXPECT_EQ(e.diagnostics()[1].path, "InjuryFatality/AtLocation/Latitude");
}

TEST(Codec, RejectsAttributesAndWrongRoot) {
  EXPECT_THROW(parse_newsform("<NewsForm><Head id=\"1\"/></NewsForm>"), ParseError);
  EXPECT_THROW(parse_newsform("<Story/>"), ParseError);
  EXPECT_THROW(parse_newsform("<NewsForm><InjuryFatality>text<Cause>Fire</Cause></InjuryFatality></NewsForm>"),
               ParseError);
}

TEST(Codec, SerializeRefusesInvalidDocuments) {
  NewsForm doc;
  FedWatch fw;
  fw.fed_action = "Increase";
  doc.events.push_back(fw);
  EXPECT_THROW(serialize_newsform(doc), InvalidDocument);
}

TEST(Codec, PartyChildrenSelectTheAlternative) {
  auto org = parse_newsform("<NewsForm><InjuryFatality><Source><FullName>Red Cross</FullName></Source></InjuryFatality></NewsForm>");
  auto person = parse_newsform("<NewsForm><InjuryFatality><Source><Family>Smith</Family></Source></InjuryFatality></NewsForm>");
  EXPECT_TRUE(std::holds_alternative<Organization>(*std::get<InjuryFatality>(org.events[0]).source));
  EXPECT_TRUE(std::holds_alternative<Person>(*std::get<InjuryFatality>(person.events[0]).source));
  EXPECT_THROW(parse_newsform("<NewsForm><InjuryFatality><Source><Family>A</Family><Ticker>B</Ticker></Source>"
                              "</InjuryFatality></NewsForm>"),
               ParseError);
}

TEST(Xml, ReaderHandlesEntitiesAndCdata) {
  auto root = xml::read("<a><b>&lt;&#65;&#x42;&amp;</b><c><![CDATA[<raw>]]></c></a>");
  ASSERT_EQ(root.children.size(), 2u);
  EXPECT_EQ(root.children[0].text, "<AB&");
  EXPECT_EQ(root.children[1].text, "<raw>");
  EXPECT_THROW(xml::read("<a><b></a>"), xml::SyntaxError);
  EXPECT_THROW(xml::read("<a>&bogus;</a>"), xml::SyntaxError);
  EXPECT_THROW(xml::read("<a/><b/>"), xml::SyntaxError);
}
