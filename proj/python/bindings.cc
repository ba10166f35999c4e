// Copyright 2026 The mal2sign Authors.
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

#include <optional>
#include <string>
#include <vector>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mal2sign/animation.h"
#include "mal2sign/lexicon.h"
#include "mal2sign/morphology.h"
#include "mal2sign/pipeline.h"
#include "mal2sign/script.h"

namespace py = pybind11;

namespace mal2sign {
namespace {

py::object JsonLoads(const std::string& doc) {
  return py::module_::import("json").attr("loads")(doc);
}

std::string HandName(Handshape h) { return std::string(HandshapeName(h)); }

Handshape ToHandshape(const std::string& name) {
  auto h = ParseHandshape(name);
  if (!h) throw py::value_error("unknown handshape: " + name);
  return *h;
}

Token FirstToken(const std::u32string& word) {
  Token t;
  t.text = word;
  t.end = word.size();
  return t;
}

py::dict TaggedDict(const TaggedToken& tt) {
  py::dict d;
  d["text"] = tt.token.text;
  d["tag"] = std::string(PosTagName(tt.tag));
  d["features"] = tt.features;
  if (tt.match == Match::kRule) {
    d["matched"] = tt.rule_id;
  } else if (tt.match == Match::kException) {
    d["matched"] = "exception";
  } else {
    d["matched"] = py::none();
  }
  return d;
}

}  // namespace
}  // namespace mal2sign

PYBIND11_MODULE(_core, m) {
  using namespace mal2sign;
  m.doc() = "Bindings for the mal2sign core library";
  m.attr("__version__") = std::string(kVersion);

  static py::exception<ResourceError> resource_error(m, "ResourceError",
                                                     PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ResourceError& e) {
      std::string msg;
      for (const auto& problem : e.problems()) msg += problem + "\n";
      py::set_error(resource_error, msg.c_str());
    } catch (const DomainError& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const TimelineError& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const LexiconError& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const RuleTableError& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  // Script.
  m.def(
      "normalize",
      [](const std::string& text) {
        const NormalizedText nt = NormalizeText(text);
        std::vector<std::pair<std::size_t, std::u32string>> dropped;
        for (const auto& d : nt.dropped) {
          dropped.emplace_back(d.offset, std::u32string(1, d.code_point));
        }
        return py::make_tuple(nt.content, dropped);
      },
      py::arg("text"),
      "Returns (normalized text, [(offset, dropped character), ...]).");
  m.def(
      "segment",
      [](const std::u32string& text) {
        std::vector<std::u32string> out;
        for (const auto& c : SegmentClusters(text)) out.push_back(c.text);
        return out;
      },
      py::arg("text"));
  m.def(
      "tokenize",
      [](const std::string& text) {
        std::vector<std::tuple<std::u32string, std::size_t, std::size_t>> out;
        for (const auto& t : Tokenize(NormalizeText(text))) {
          out.emplace_back(t.text, t.start, t.end);
        }
        return out;
      },
      py::arg("text"), "Normalizes, then returns [(token, start, end), ...].");

  // Geometry.
  py::class_<Quat>(m, "Quat")
      .def(py::init<>())
      .def(py::init([](double w, double x, double y, double z) {
             return Quat{w, x, y, z};
           }),
           py::arg("w"), py::arg("x"), py::arg("y"), py::arg("z"))
      .def_readwrite("w", &Quat::w)
      .def_readwrite("x", &Quat::x)
      .def_readwrite("y", &Quat::y)
      .def_readwrite("z", &Quat::z)
      .def("norm", &Quat::Norm)
      .def(py::self == py::self)
      .def("__iter__",
           [](const Quat& q) {
             return py::iter(py::make_tuple(q.w, q.x, q.y, q.z));
           })
      .def("__repr__", [](const Quat& q) {
        return "Quat(" + std::to_string(q.w) + ", " + std::to_string(q.x) +
               ", " + std::to_string(q.y) + ", " + std::to_string(q.z) + ")";
      });

  py::class_<Pose>(m, "Pose")
      .def(py::init<>())
      .def_static("rest", &Pose::Rest,
                  py::arg("joint_count") = kDefaultJoints.size())
      .def_readwrite("rotations", &Pose::rotations)
      .def_property(
          "hand_left", [](const Pose& p) { return HandName(p.hand_left); },
          [](Pose& p, const std::string& h) { p.hand_left = ToHandshape(h); })
      .def_property(
          "hand_right", [](const Pose& p) { return HandName(p.hand_right); },
          [](Pose& p, const std::string& h) { p.hand_right = ToHandshape(h); })
      .def_readwrite("facial", &Pose::facial)
      .def(py::self == py::self);

  m.def("slerp", &Slerp, py::arg("a"), py::arg("b"), py::arg("t"));
  m.def("angular_distance", &AngularDistance, py::arg("a"), py::arg("b"));
  m.def("blend_pose", &BlendPose, py::arg("a"), py::arg("b"), py::arg("t"));

  // Timeline.
  py::class_<Timeline>(m, "Timeline")
      .def(py::init<>())
      .def_readonly("skeleton_id", &Timeline::skeleton_id)
      .def_readonly("joints", &Timeline::joints)
      .def_readonly("duration", &Timeline::duration)
      .def_property_readonly("markers",
                             [](const Timeline& tl) {
                               std::vector<std::tuple<std::string, double, double>> out;
                               for (const auto& c : tl.clips) {
                                 out.emplace_back(c.marker.gloss, c.marker.start,
                                                  c.marker.end);
                               }
                               return out;
                             })
      .def("sample", &Sample, py::arg("t"))
      .def("check", &CheckTimeline)
      .def("to_json", &SerializeTimeline)
      .def_static("from_json",
                  [](const std::string& doc) { return ParseTimeline(doc); },
                  py::arg("document"))
      .def(py::self == py::self);

  // Resources and the pipeline.
  py::class_<PipelineResources>(m, "Resources")
      .def(
          "analyze",
          [](const PipelineResources& r, const std::u32string& word) {
            return TaggedDict(Analyze(FirstToken(word), r.rules));
          },
          py::arg("word"))
      .def(
          "stem",
          [](const PipelineResources& r, const std::u32string& word) {
            return Stem(Analyze(FirstToken(word), r.rules), r.rules);
          },
          py::arg("word"))
      .def(
          "lookup",
          [](const PipelineResources& r,
             const std::u32string& root) -> std::optional<std::string> {
            if (const SignEntry* e = Lookup(root, r.lexicon)) return e->gloss;
            return std::nullopt;
          },
          py::arg("root"))
      .def(
          "fingerspell",
          [](const PipelineResources& r, const std::u32string& word) {
            return Fingerspell(FirstToken(word), r.lexicon);
          },
          py::arg("word"))
      .def(
          "build_timeline",
          [](const PipelineResources& r, const std::vector<std::string>& glosses) {
            std::vector<SignEntry> signs;
            for (const auto& g : glosses) {
              const SignEntry* e = r.lexicon.Find(g);
              if (!e) throw py::key_error("no sign for gloss " + g);
              signs.push_back(*e);
            }
            return BuildTimeline(signs, r.timeline, r.skeleton);
          },
          py::arg("glosses"))
      .def_property_readonly("glosses",
                             [](const PipelineResources& r) {
                               std::vector<std::string> out;
                               for (const auto& [g, e] : r.lexicon.entries()) {
                                 out.push_back(g);
                               }
                               return out;
                             })
      .def("lexicon_json",
           [](const PipelineResources& r) { return SerializeLexicon(r.lexicon); });

  m.def("default_config_path",
        [] { return DefaultConfigPath().string(); });
  m.def(
      "_load_resources",
      [](const std::string& config, std::optional<std::string> rules,
         std::optional<std::string> lexicon) {
        ResourcePaths paths;
        paths.config = config;
        if (rules) paths.rules = *rules;
        if (lexicon) paths.lexicon = *lexicon;
        return LoadResources(paths);
      },
      py::arg("config"), py::arg("rules") = py::none(),
      py::arg("lexicon") = py::none());

  m.def(
      "translate",
      [](const PipelineResources& r, const std::string& text) {
        return JsonLoads(SerializeResult(Translate(text, r)));
      },
      py::arg("resources"), py::arg("text"),
      "Full pipeline; returns the result document as a dict.");
  m.def(
      "translate_timeline",
      [](const PipelineResources& r, const std::string& text) {
        return Translate(text, r).timeline;
      },
      py::arg("resources"), py::arg("text"));
}
