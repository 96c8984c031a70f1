// Copyright 2026 The cftkit Authors. All Rights Reserved.
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

#include "cft/fixtures.hpp"

#include "json.hpp"

namespace cft::fixtures {
namespace {

constexpr double kP = kDefaultProbability;

Expr ref(std::string name) { return Expr::ref(std::move(name)); }
Expr ref(std::string_view port, std::string_view mode) {
  return Expr::ref(port, mode);
}

Port in(std::string name, std::vector<std::string> modes) {
  return {std::move(name), Direction::Input, std::move(modes), {}};
}

Port out(std::string name, std::vector<std::string> modes) {
  return {std::move(name), Direction::Output, std::move(modes), {}};
}

BasicEvent event(std::string name) { return {std::move(name), kP, {}}; }

OutputLogic logic(std::string port, std::string mode, Expr expr) {
  return {std::move(port), std::move(mode), std::move(expr), {}};
}

Connection wire(std::string src, std::string src_port, std::string dst,
                std::string dst_port) {
  return {{std::move(src), std::move(src_port)},
          {std::move(dst), std::move(dst_port)},
          {}};
}

ComponentDefinition switch_definition(std::string name, std::string comm_mode) {
  ComponentDefinition sw;
  sw.name = std::move(name);
  sw.ports = {in("comm", {comm_mode}),
              in("ecu", {"loss"}),
              in("ccu", {"loss"}),
              in("cl_in", {"loss_red_ecu", "loss_red_ccu"}),
              out("cl_out", {"loss_ecu", "loss_ccu"}),
              out("o", {"loss_of_channel"})};
  sw.events = {event("sw_fail")};
  sw.outputs = {
      logic("cl_out", "loss_ecu", ref("ecu", "loss")),
      logic("cl_out", "loss_ccu", ref("ccu", "loss")),
      logic("o", "loss_of_channel",
            Expr::or_of({ref("comm", comm_mode), ref("sw_fail"),
                         Expr::and_of({ref("ecu", "loss"),
                                       ref("cl_in", "loss_red_ecu"),
                                       ref("ccu", "loss"),
                                       ref("cl_in", "loss_red_ccu")})}))};
  return sw;
}

}  // namespace

SystemModel situation_display_cft() {
  ComponentDefinition sensor{"Sensor", {out("o", {"loss", "err"})},
                             {event("s_loss"), event("s_err")},
                             {logic("o", "loss", ref("s_loss")),
                              logic("o", "err", ref("s_err"))},
                             {}};
  ComponentDefinition gps{"GPSReceiver", {out("o", {"loss", "err"})},
                          {event("g_loss"), event("g_err")},
                          {logic("o", "loss", ref("g_loss")),
                           logic("o", "err", ref("g_err"))},
                          {}};
  ComponentDefinition channel{
      "Channel",
      {in("i", {"loss", "err"}), out("o", {"loss", "err"})},
      {event("c_loss"), event("c_err")},
      {logic("o", "loss", Expr::or_of({ref("i", "loss"), ref("c_loss")})),
       logic("o", "err", Expr::or_of({ref("i", "err"), ref("c_err")}))},
      {}};
  ComponentDefinition channel_interface{
      "ChannelInterface",
      {in("i1", {"loss", "err"}), in("i2", {"loss", "err"}),
       out("o", {"loss", "err"})},
      {event("ci_loss"), event("ci_err")},
      {logic("o", "loss",
             Expr::or_of({Expr::and_of({ref("i1", "loss"), ref("i2", "loss")}),
                          ref("ci_loss")})),
       logic("o", "err",
             Expr::or_of({ref("i1", "err"), ref("i2", "err"), ref("ci_err")}))},
      {}};
  ComponentDefinition processing{
      "Processing",
      {in("is", {"loss", "err"}), in("ig", {"loss", "err"}),
       out("o", {"lo", "plo", "err"})},
      {event("p_loss"), event("p_err")},
      {logic("o", "lo",
             Expr::or_of({Expr::and_of({ref("is", "loss"), ref("ig", "loss")}),
                          ref("p_loss")})),
       logic("o", "plo",
             Expr::or_of({ref("is", "loss"), ref("ig", "loss"), ref("p_loss")})),
       logic("o", "err",
             Expr::or_of({ref("is", "err"), ref("ig", "err"), ref("p_err")}))},
      {}};

  SystemModel sys;
  sys.name = std::string(kSituationDisplaySystem);
  sys.definitions = {sensor, gps, channel, channel_interface, processing};
  sys.instances = {{"sensor", "Sensor", {}},      {"gps", "GPSReceiver", {}},
                   {"ch1", "Channel", {}},        {"ch2", "Channel", {}},
                   {"ci", "ChannelInterface", {}}, {"proc", "Processing", {}}};
  sys.connections = {wire("gps", "o", "ch1", "i"),    wire("gps", "o", "ch2", "i"),
                     wire("ch1", "o", "ci", "i1"),    wire("ch2", "o", "ci", "i2"),
                     wire("sensor", "o", "proc", "is"), wire("ci", "o", "proc", "ig")};
  sys.tops = {{"Lo", "proc", "o", "lo", {}},
              {"pLo", "proc", "o", "plo", {}},
              {"Err", "proc", "o", "err", {}}};
  return sys;
}

FaultTree situation_display_classic() {
  FaultTree ft;
  auto ev = [&](const char* name) { return ft.add_event(name, kP); };
  const auto s_loss = ev("sensor.s_loss");
  const auto s_err = ev("sensor.s_err");
  const auto g_loss = ev("gps.g_loss");
  const auto g_err = ev("gps.g_err");
  const auto c1_loss = ev("ch1.c_loss");
  const auto c1_err = ev("ch1.c_err");
  const auto c2_loss = ev("ch2.c_loss");
  const auto c2_err = ev("ch2.c_err");
  const auto ci_loss = ev("ci.ci_loss");
  const auto ci_err = ev("ci.ci_err");
  const auto p_loss = ev("proc.p_loss");
  const auto p_err = ev("proc.p_err");

  const auto b1 = ft.add_gate(GateOp::Or, {c1_loss, g_loss}, "branch1_loss");
  const auto b2 = ft.add_gate(GateOp::Or, {c2_loss, g_loss}, "branch2_loss");
  const auto gps_loss = ft.add_gate(
      GateOp::Or, {ci_loss, ft.add_gate(GateOp::And, {b1, b2})}, "gps_path_loss");
  const auto lo = ft.add_gate(
      GateOp::Or, {p_loss, ft.add_gate(GateOp::And, {s_loss, gps_loss})}, "loss");
  const auto plo = ft.add_gate(
      GateOp::Or, {p_loss, ft.add_gate(GateOp::Or, {s_loss, gps_loss})},
      "partial_loss");

  const auto e1 = ft.add_gate(GateOp::Or, {c1_err, g_err}, "branch1_err");
  const auto e2 = ft.add_gate(GateOp::Or, {c2_err, g_err}, "branch2_err");
  const auto gps_err = ft.add_gate(
      GateOp::Or, {ci_err, ft.add_gate(GateOp::Or, {e1, e2})}, "gps_path_err");
  const auto err = ft.add_gate(
      GateOp::Or, {p_err, ft.add_gate(GateOp::Or, {s_err, gps_err})}, "erroneous");

  ft.add_root("Lo", lo);
  ft.add_root("pLo", plo);
  ft.add_root("Err", err);
  return ft;
}

SystemModel crosslink_cft() {
  ComponentDefinition comm{"CommSource", {out("o", {"loss"})},
                           {event("comm_fail")},
                           {logic("o", "loss", ref("comm_fail"))},
                           {}};
  ComponentDefinition controller{"Controller", {out("o", {"loss"})},
                                 {event("fail")},
                                 {logic("o", "loss", ref("fail"))},
                                 {}};
  ComponentDefinition crosslink{
      "CrossLink",
      {in("a", {"loss_ecu", "loss_ccu"}), in("b", {"loss_ecu", "loss_ccu"}),
       out("to_a", {"loss_red_ecu", "loss_red_ccu"}),
       out("to_b", {"loss_red_ecu", "loss_red_ccu"})},
      {event("cl_int")},
      {logic("to_a", "loss_red_ecu", Expr::or_of({ref("b", "loss_ecu"), ref("cl_int")})),
       logic("to_a", "loss_red_ccu", Expr::or_of({ref("b", "loss_ccu"), ref("cl_int")})),
       logic("to_b", "loss_red_ecu", Expr::or_of({ref("a", "loss_ecu"), ref("cl_int")})),
       logic("to_b", "loss_red_ccu", Expr::or_of({ref("a", "loss_ccu"), ref("cl_int")}))},
      {}};
  ComponentDefinition actor{
      "Actor",
      {in("i", {"loss_of_channel"}), out("o", {"loss"})},
      {event("act_fail")},
      {logic("o", "loss",
             Expr::or_of({ref("i", "loss_of_channel"), ref("act_fail")}))},
      {}};
  ComponentDefinition mission{
      "Mission",
      {in("a1", {"loss"}), in("a2", {"loss"}), in("b1", {"loss"}),
       in("b2", {"loss"}), out("o", {"loss_of_actuation"})},
      {},
      {logic("o", "loss_of_actuation",
             Expr::and_of({Expr::or_of({ref("a1", "loss"), ref("a2", "loss")}),
                           Expr::or_of({ref("b1", "loss"), ref("b2", "loss")})}))},
      {}};

  SystemModel sys;
  sys.name = std::string(kCrossLinkSystem);
  sys.definitions = {comm, controller, switch_definition("Switch", "loss"),
                     crosslink, actor, mission};
  for (const std::string side : {"A", "B"}) {
    sys.instances.push_back({"comm_" + side, "CommSource", {}});
    sys.instances.push_back({"ecu_" + side, "Controller", {}});
    sys.instances.push_back({"ccu_" + side, "Controller", {}});
    sys.instances.push_back({"sw_" + side, "Switch", {}});
    sys.instances.push_back({"actor1_" + side, "Actor", {}});
    sys.instances.push_back({"actor2_" + side, "Actor", {}});
  }
  sys.instances.push_back({"crosslink", "CrossLink", {}});
  sys.instances.push_back({"mission", "Mission", {}});

  for (const std::string side : {"A", "B"}) {
    const std::string lower = side == "A" ? "a" : "b";
    const auto sw = "sw_" + side;
    sys.connections.push_back(wire("comm_" + side, "o", sw, "comm"));
    sys.connections.push_back(wire("ecu_" + side, "o", sw, "ecu"));
    sys.connections.push_back(wire("ccu_" + side, "o", sw, "ccu"));
    sys.connections.push_back(wire(sw, "cl_out", "crosslink", lower));
    sys.connections.push_back(wire("crosslink", "to_" + lower, sw, "cl_in"));
    sys.connections.push_back(wire(sw, "o", "actor1_" + side, "i"));
    sys.connections.push_back(wire(sw, "o", "actor2_" + side, "i"));
  }
  sys.connections.push_back(wire("actor1_A", "o", "mission", "a1"));
  sys.connections.push_back(wire("actor2_A", "o", "mission", "a2"));
  sys.connections.push_back(wire("actor1_B", "o", "mission", "b1"));
  sys.connections.push_back(wire("actor2_B", "o", "mission", "b2"));

  sys.tops = {{"loss_of_actuation", "mission", "o", "loss_of_actuation", {}}};
  return sys;
}

FaultTree crosslink_classic() {
  FaultTree ft;
  auto ev = [&](const std::string& name) { return ft.add_event(name, kP); };
  struct Side {
    NodeId comm, ecu, ccu, sw, act1, act2;
  };
  Side sides[2];
  for (int s = 0; s < 2; ++s) {
    const std::string x = s == 0 ? "A" : "B";
    sides[s] = {ev("comm_" + x + ".comm_fail"), ev("ecu_" + x + ".fail"),
                ev("ccu_" + x + ".fail"),       ev("sw_" + x + ".sw_fail"),
                ev("actor1_" + x + ".act_fail"), ev("actor2_" + x + ".act_fail")};
  }
  const auto cl_int = ev("crosslink.cl_int");

  NodeId lost[2];
  for (int s = 0; s < 2; ++s) {
    const auto& own = sides[s];
    const auto& other = sides[1 - s];
    const auto controllers = ft.add_gate(
        GateOp::And, {own.ecu, own.ccu, ft.add_gate(GateOp::Or, {other.ecu, cl_int}),
                      ft.add_gate(GateOp::Or, {other.ccu, cl_int})});
    lost[s] = ft.add_gate(GateOp::Or,
                          {own.comm, own.sw, own.act1, own.act2, controllers},
                          s == 0 ? "side_A_lost" : "side_B_lost");
  }
  ft.add_root("loss_of_actuation",
              ft.add_gate(GateOp::And, {lost[0], lost[1]}, "loss_of_actuation"));
  return ft;
}

SystemModel crosslink_self_feeding() {
  auto sys = crosslink_cft();
  sys.definitions.push_back(switch_definition("SwitchLoopback", "loss_of_channel"));
  for (auto& inst : sys.instances)
    if (inst.name == "sw_A") inst.definition = "SwitchLoopback";
  for (auto& c : sys.connections)
    if (c.target == PortRef{"sw_A", "comm"}) c.source = {"sw_A", "o"};
  return sys;
}

const std::vector<CatalogScenario>& scenario_catalog() {
  static const std::vector<CatalogScenario> kCatalog = {
      {"crosslink.cft", "loss_of_actuation",
       {"ecu_A.fail", "ccu_A.fail", "actor1_B.act_fail", "actor2_B.act_fail"},
       false, "case-study",
       "channel A actuators are steered with the controllers of channel B"},
      {"crosslink.cft", "loss_of_actuation", {}, false, "construction",
       "no failure, no top event"},
      {"crosslink.cft", "loss_of_actuation",
       {"comm_A.comm_fail", "comm_B.comm_fail"}, true, "case-study",
       "no communication input on either side"},
      {"crosslink.cft", "loss_of_actuation", {"sw_A.sw_fail", "sw_B.sw_fail"},
       true, "case-study", "both switches down"},
      {"crosslink.cft", "loss_of_actuation",
       {"ecu_A.fail", "ccu_A.fail", "ecu_B.fail", "ccu_B.fail"}, true,
       "case-study", "both ECUs and both CCUs are down"},
      {"crosslink.cft", "loss_of_actuation",
       {"ecu_A.fail", "ccu_A.fail", "crosslink.cl_int"}, false, "derived",
       "channel A is lost but channel B keeps its own controllers"},
      {"situation_display.cft", "Lo", {}, false, "construction",
       "no failure, no top event"},
      {"situation_display.cft", "Lo", {"sensor.s_loss", "gps.g_loss"}, true,
       "case-study", "both position sources lost"},
      {"situation_display.cft", "pLo", {"sensor.s_loss"}, true, "case-study",
       "one position source lost"},
      {"situation_display.cft", "Lo", {"sensor.s_loss"}, false, "derived",
       "GPS path still delivers"},
      {"situation_display.cft", "Lo", {"ch1.c_loss"}, false, "derived",
       "redundant channel 2 carries the GPS signal"},
      {"situation_display.cft", "pLo", {"ch1.c_loss", "ch2.c_loss"}, true,
       "derived", "both channels lost: GPS data unavailable"},
      {"situation_display.cft", "Err", {"gps.g_err"}, true, "case-study",
       "any erroneous contribution reaches the display"},
  };
  return kCatalog;
}

std::string scenario_catalog_json() {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& s : scenario_catalog()) {
    nlohmann::ordered_json j;
    j["fixture"] = s.fixture;
    j["top"] = s.top;
    j["failed"] = s.failed;
    j["expected"] = s.expected;
    j["provenance"] = s.provenance;
    j["note"] = s.note;
    list.push_back(std::move(j));
  }
  doc["scenarios"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::vector<SourceFile> source_files() {
  return {{"situation_display.cft", situation_display_source()},
          {"crosslink.cft", crosslink_source()}};
}

}  // namespace cft::fixtures
