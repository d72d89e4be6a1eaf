#include "cubelaw/acceptance.hpp"
#include "cubelaw/cube_composition.hpp"
#include "cubelaw/json_io.hpp"

#include <CLI11.hpp>

#include <array>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace {

using namespace cubelaw;
using cubelaw::json::json;

constexpr int kMathError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string field = "Q";
  std::string disc;
  std::uint64_t seed = 42;
  std::string format = "json";
};

struct Context {
  const Globals& g;
  std::vector<json> inputs;

  const FieldDescriptor& field() const {
    try {
      return FieldDescriptor::by_name(g.field);
    } catch (const MathError&) {
      throw UsageError("--field must be Q or Q-sqrt2");
    }
  }
  ExtensionPtr ext() const {
    if (g.disc.empty()) throw UsageError("this command needs --disc");
    json j;
    try {
      j = json::parse(g.disc);
    } catch (const json::parse_error&) {
      j = g.disc;
    }
    return Extension::make(cubelaw::json::decode_element(field(), j));
  }
  const json& in(std::size_t i) const { return inputs.at(i); }
  bool pretty() const { return g.format == "pretty"; }
};

// ------------------------------------------------------------ pretty printing

std::string layers(const Cube& A) {
  auto e = [&](int i) { return to_string(A[i]); };
  return "i=1: [" + e(0) + " " + e(1) + "; " + e(2) + " " + e(3) + "]\n" + "i=2: [" + e(4) + " " +
         e(5) + "; " + e(6) + " " + e(7) + "]";
}

std::string matrix_text(const Mat2& m) {
  return "[" + to_string(m.p) + " " + to_string(m.q) + "; " + to_string(m.r) + " " +
         to_string(m.s) + "]";
}

std::string table_text(const ClassGroupTable& t) {
  std::ostringstream os;
  os << "disc " << to_decimal(t.disc) << ": " << t.reps.size() << " classes, oriented order "
     << t.oriented_order << "\n";
  for (std::size_t i = 0; i < t.reps.size(); ++i) os << "  [" << i << "] " << to_string(t.reps[i]) << "\n";
  os << "  *  |";
  for (std::size_t j = 0; j < t.reps.size(); ++j) os << " " << j;
  os << "\n";
  for (std::size_t i = 0; i < t.table.size(); ++i) {
    os << "  " << i << "  |";
    for (int v : t.table[i]) os << " " << v;
    os << "\n";
  }
  std::string s = os.str();
  s.pop_back();
  return s;
}

struct Output {
  json data;
  std::string text;
};

// ------------------------------------------------------------------ commands

struct Command {
  const char* name;
  const char* help;
  std::size_t arity;
  std::function<Output(const Context&)> run;
};

std::vector<Command> commands() {
  namespace J = cubelaw::json;
  std::vector<Command> cs;
  cs.push_back({"forms-of", "attached forms Q1, Q2, Q3 of a cube", 1, [](const Context& c) {
                  AttachedForms q = attached_forms(J::decode_cube(c.field(), c.in(0)));
                  return Output{{{"forms", {J::encode(q.q1), J::encode(q.q2), J::encode(q.q3)}}},
                                "Q1 = " + to_string(q.q1) + "\nQ2 = " + to_string(q.q2) +
                                    "\nQ3 = " + to_string(q.q3)};
                }});
  cs.push_back({"disc", "discriminant of a cube or form", 1, [](const Context& c) {
                  const json& j = c.in(0);
                  BaseElement d = j.is_object() && j.contains("a")
                                      ? disc_form(J::decode_form(c.field(), j))
                                      : disc_cube(J::decode_cube(c.field(), j));
                  return Output{{{"disc", J::encode(d)}}, to_string(d)};
                }});
  cs.push_back({"reduce-cube", "equivalent reduced cube with its transcript", 1,
                [](const Context& c) {
                  CubeReduction r = reduce_cube(J::decode_cube(c.field(), c.in(0)));
                  std::string t = layers(r.cube) + "\ntranscript:";
                  for (const auto& a : r.transcript.actions) {
                    t += "\n  axis " + std::to_string(a.axis) + " " + matrix_text(a.matrix);
                  }
                  t += "\n  scalar " + to_string(r.transcript.scalar);
                  json out = J::encode(r.cube);
                  out["transcript"] = J::encode(r.transcript);
                  return Output{out, t};
                }});
  cs.push_back({"act", "apply a Gamma element {t1,t2,t3,u} to a cube", 2, [](const Context& c) {
                  Cube A = act_cube(J::decode_cube(c.field(), c.in(0)),
                                    J::decode_gamma(c.field(), c.in(1)));
                  return Output{J::encode(A), layers(A)};
                }});
  cs.push_back({"identity-cube", "identity cube of the extension", 0, [](const Context& c) {
                  Cube A = identity_cube(c.ext());
                  return Output{J::encode(A), layers(A)};
                }});
  cs.push_back({"invert-cube", "inverse sign pattern of a cube", 1, [](const Context& c) {
                  Cube A = inverse_cube(J::decode_cube(c.field(), c.in(0)));
                  return Output{J::encode(A), layers(A)};
                }});
  cs.push_back({"compose-cubes", "group law on projective cubes", 2, [](const Context& c) {
                  auto ext = c.ext();
                  Cube A = compose_cubes(J::decode_cube(c.field(), c.in(0)),
                                         J::decode_cube(c.field(), c.in(1)), ext);
                  return Output{J::encode(A), layers(A)};
                }});
  cs.push_back({"compose-forms", "composition of two forms", 2, [](const Context& c) {
                  auto ext = c.ext();
                  QuadForm Q = compose_forms(J::decode_form(c.field(), c.in(0)),
                                             J::decode_form(c.field(), c.in(1)), ext);
                  return Output{J::encode(Q), to_string(Q)};
                }});
  cs.push_back({"psi", "oriented ideal of a form", 1, [](const Context& c) {
                  OrientedIdeal I = psi_map(J::decode_form(c.field(), c.in(0)), c.ext());
                  return Output{J::encode(I), to_string(I)};
                }});
  cs.push_back({"phi", "form of an aligned oriented ideal", 1, [](const Context& c) {
                  QuadForm Q = phi_map(J::decode_ideal(c.ext(), c.in(0)));
                  return Output{J::encode(Q), to_string(Q)};
                }});
  cs.push_back({"psi-prime", "balanced triple of a cube", 1, [](const Context& c) {
                  BalancedTriple T = psi_prime(J::decode_cube(c.field(), c.in(0)), c.ext());
                  return Output{J::encode(T), to_string(T)};
                }});
  cs.push_back({"phi-prime", "cube of a balanced triple", 1, [](const Context& c) {
                  Cube A = phi_prime(J::decode_triple(c.ext(), c.in(0)));
                  return Output{J::encode(A), layers(A)};
                }});
  cs.push_back({"mul-ideals", "product of two oriented ideals", 2, [](const Context& c) {
                  auto ext = c.ext();
                  OrientedIdeal P =
                      mul_ideals(J::decode_ideal(ext, c.in(0)), J::decode_ideal(ext, c.in(1)));
                  return Output{J::encode(P), to_string(P)};
                }});
  cs.push_back({"invert-ideal", "inverse oriented ideal", 1, [](const Context& c) {
                  OrientedIdeal P = inverse_ideal(J::decode_ideal(c.ext(), c.in(0)));
                  return Output{J::encode(P), to_string(P)};
                }});
  cs.push_back({"is-principal", "oriented principality with a witness (K = Q)", 1,
                [](const Context& c) {
                  PrincipalDecision d = is_oriented_principal(J::decode_ideal(c.ext(), c.in(0)));
                  json out{{"principal", d.principal}};
                  std::string t = d.principal ? "principal" : "not principal";
                  if (d.witness) {
                    out["witness"] = J::encode(*d.witness);
                    t += ", generated by " + to_string(*d.witness);
                  }
                  return Output{out, t};
                }});
  cs.push_back({"classgroup", "narrow class group table of --disc (K = Q)", 0,
                [](const Context& c) {
                  auto ext = c.ext();
                  if (!ext->base().is_rational()) {
                    throw UnsupportedBaseField("class group tables are computed over Q only");
                  }
                  ClassGroupTable t = class_group_table(ext->d().u());
                  return Output{J::encode(t), table_text(t)};
                }});
  cs.push_back({"make-balanced", "validate three ideals as a balanced triple", 3,
                [](const Context& c) {
                  auto ext = c.ext();
                  BalancedTriple T = make_balanced(J::decode_ideal(ext, c.in(0)),
                                                   J::decode_ideal(ext, c.in(1)),
                                                   J::decode_ideal(ext, c.in(2)));
                  return Output{J::encode(T), to_string(T)};
                }});
  return cs;
}

std::vector<json> gather_inputs(const std::vector<std::string>& args, std::size_t arity) {
  std::vector<json> out;
  auto parse = [](const std::string& s) {
    try {
      return json::parse(s);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("malformed JSON input: ") + e.what());
    }
  };
  if (!args.empty()) {
    for (const auto& a : args) out.push_back(parse(a));
  } else if (arity > 0) {
    std::string all{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    json j = parse(all);
    if (arity > 1 && j.is_array() && j.size() == arity) {
      for (auto& x : j) out.push_back(x);
    } else {
      out.push_back(j);
    }
  }
  if (out.size() != arity) {
    throw UsageError("expected " + std::to_string(arity) + " JSON input(s), got " +
                     std::to_string(out.size()));
  }
  return out;
}

json inputs_payload(const std::vector<json>& inputs, const Globals& g) {
  if (inputs.empty()) return json{{"field", g.field}, {"disc", g.disc}};
  if (inputs.size() == 1) return inputs[0];
  return inputs;
}

int run_verify(const Globals& g) {
  auto results = run_acceptance(g.seed, std::cerr);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    if (g.format == "pretty") {
      std::cout << format_result(r) << "\n";
    } else {
      std::cout << json{{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}}
                       .dump()
                << "\n";
    }
  }
  std::cout.flush();
  return all ? 0 : kMathError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cube and quadratic form composition over Q and Q(sqrt2)"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field", g.field, "base field: Q or Q-sqrt2")
      ->check(CLI::IsMember({"Q", "Q-sqrt2"}))
      ->capture_default_str();
  app.add_option("--disc", g.disc, "fundamental discriminant D (integer or JSON element)");
  app.add_option("--seed", g.seed, "seed for verify")->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "pretty"}))
      ->capture_default_str();
  app.fallthrough();

  std::vector<Command> cs = commands();
  std::array<std::string, 3> slots;
  const Command* chosen = nullptr;
  bool verify = false;
  for (const auto& c : cs) {
    auto* sub = app.add_subcommand(c.name, c.help);
    // One positional per input: a vector option would split JSON arrays at commas.
    for (std::size_t k = 0; k < slots.size(); ++k) {
      sub->add_option("input" + std::to_string(k + 1), slots[k],
                      "JSON input (all inputs come from stdin when omitted)");
    }
    sub->callback([&chosen, &c] { chosen = &c; });
  }
  app.add_subcommand("verify", "run the acceptance suites")->callback([&verify] { verify = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (verify) return run_verify(g);

  std::vector<nlohmann::json> inputs;
  try {
    std::vector<std::string> args;
    for (const auto& a : slots) {
      if (!a.empty()) args.push_back(a);
    }
    inputs = gather_inputs(args, chosen->arity);
    Context ctx{g, inputs};
    Output out = chosen->run(ctx);
    std::cout << (ctx.pretty() ? out.text : out.data.dump()) << std::endl;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const MathError& e) {
    nlohmann::json payload{{"error", e.kind()}, {"message", e.what()}, {"input", inputs_payload(inputs, g)}};
    std::cout << payload.dump() << std::endl;
    return kMathError;
  } catch (const nlohmann::json::exception& e) {
    nlohmann::json payload{{"error", "InvalidInput"}, {"message", e.what()}, {"input", inputs_payload(inputs, g)}};
    std::cout << payload.dump() << std::endl;
    return kMathError;
  }
}
