#include "tretoc/roles.hpp"

namespace tretoc {

namespace {

bool is_original(const Tweet& t) { return !t.retweet_of && !t.dangling; }

}  // namespace

std::set<TweetId> original_tweets(const TopicDataset& ds) {
  std::set<TweetId> out;
  for (const Tweet& t : ds.tweets()) {
    if (is_original(t)) out.insert(t.id);
  }
  return out;
}

std::set<TweetId> amplified_tweets(const TopicDataset& ds) {
  // TopicDataset guarantees every retweet_of resolves to an original here.
  std::set<TweetId> out;
  for (const Tweet& t : ds.tweets()) {
    if (t.retweet_of) out.insert(*t.retweet_of);
  }
  return out;
}

std::set<TweetId> retweets_of(const TweetId& t, const TopicDataset& ds) {
  const Tweet* origin = ds.find(t);
  if (origin == nullptr || !is_original(*origin)) {
    throw Error("tweet " + t.str() + " is not an original tweet of topic '" + ds.topic().str() + "'");
  }
  std::set<TweetId> out;
  for (const Tweet& r : ds.tweets()) {
    if (r.retweet_of == t) out.insert(r.id);
  }
  return out;
}

std::set<UserId> content_creators(const TopicDataset& ds) {
  std::set<UserId> out;
  for (const TweetId& id : amplified_tweets(ds)) out.insert(ds.find(id)->author);
  return out;
}

std::set<UserId> content_distributors(const TopicDataset& ds) {
  return assign_roles(ds).distributors;
}

RoleAssignment assign_roles(const TopicDataset& ds) {
  RoleAssignment ra;
  ra.topic = ds.topic();
  for (const Tweet& t : ds.tweets()) {
    if (is_original(t)) ra.originals.insert(t.id);
  }
  std::set<UserId> retweeters;
  for (const Tweet& r : ds.tweets()) {
    if (!r.retweet_of) continue;
    const Tweet& origin = *ds.find(*r.retweet_of);
    ra.amplified.insert(origin.id);
    ra.retweet_map[origin.id].insert(r.id);
    ra.creators.insert(origin.author);
    retweeters.insert(r.author);
    if (r.author != origin.author) ra.retweet_links.emplace(r.author, origin.author);
  }
  for (const UserId& u : retweeters) {
    if (!ra.creators.contains(u)) ra.distributors.insert(u);
  }
  return ra;
}

}  // namespace tretoc
