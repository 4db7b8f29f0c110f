#include "attdel/kripke.hpp"

#include <algorithm>

#include "attdel/errors.hpp"

namespace attdel {

int KripkeModel::add_world(std::string id, AtomSet val) {
  if (static_cast<int>(val.size()) != sig.universe_size()) {
    throw Error("world valuation has wrong universe size");
  }
  world_ids.push_back(std::move(id));
  valuation.push_back(std::move(val));
  return world_count() - 1;
}

int KripkeModel::world_index(const std::string& id) const {
  auto it = std::find(world_ids.begin(), world_ids.end(), id);
  if (it == world_ids.end()) throw Error("unknown world id: " + id);
  return static_cast<int>(it - world_ids.begin());
}

int EventModel::add_event(std::string id, Formula precondition) {
  event_ids.push_back(std::move(id));
  if (is_literal_conjunction(precondition)) {
    pre_conj.push_back(normalize(precondition, sig));
  } else {
    pre_conj.push_back(std::nullopt);
  }
  pre.push_back(std::move(precondition));
  return event_count() - 1;
}

int EventModel::event_index(const std::string& id) const {
  auto it = std::find(event_ids.begin(), event_ids.end(), id);
  if (it == event_ids.end()) throw Error("unknown event id: " + id);
  return static_cast<int>(it - event_ids.begin());
}

bool EventModel::operator==(const EventModel& other) const {
  return sig == other.sig && event_ids == other.event_ids &&
         pre == other.pre && rel == other.rel;
}

std::vector<int> MultiPointedEventModel::designated_indices() const {
  std::vector<int> out;
  for (int e = 0; e < model.event_count(); ++e) {
    if (designated.test(e)) out.push_back(e);
  }
  return out;
}

namespace {

template <typename Model>
std::vector<std::string> image(const Model& m,
                               const std::vector<std::string>& ids,
                               AgentIndex a, int from) {
  std::vector<std::string> out;
  const AtomSet& succ = m.rel.successors(a, from);
  for (std::size_t i = succ.find_first(); i != AtomSet::npos;
       i = succ.find_next(i)) {
    out.push_back(ids[i]);
  }
  return out;
}

}  // namespace

std::vector<std::string> successors(const KripkeModel& m, AgentIndex a,
                                    const std::string& world) {
  return image(m, m.world_ids, a, m.world_index(world));
}

std::vector<std::string> successors(const EventModel& m, AgentIndex a,
                                    const std::string& event) {
  return image(m, m.event_ids, a, m.event_index(event));
}

}  // namespace attdel
