#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "tretoc/roles.hpp"

using namespace tretoc;
using fixtures::tid;
using fixtures::tweet;
using fixtures::user;

namespace {

TopicDataset ten_tweets() {
  // t1, t2 and t4 are retweeted; t3 and t5 are not.
  return TopicDataset(TopicId("h"), {tweet("t1", "a"), tweet("t2", "b"), tweet("t3", "c"), tweet("t4", "d"),
                                     tweet("t5", "e"), tweet("t6", "f", "t1"), tweet("t7", "g", "t1"),
                                     tweet("t8", "f", "t2"), tweet("t9", "h", "t4"), tweet("t10", "i", "t4")});
}

}  // namespace

TEST(Roles, OriginalTweets) {
  TopicDataset ds(TopicId("h"), {tweet("t1", "u1"), tweet("t2", "u2", "t1")});
  EXPECT_EQ(original_tweets(ds), std::set<TweetId>{tid("t1")});
  TopicDataset all_rt(TopicId("h"), {});
  EXPECT_TRUE(original_tweets(all_rt).empty());
}

TEST(Roles, DanglingTweetsAreNotOriginals) {
  Tweet d = tweet("x", "u9");
  d.dangling = true;
  TopicDataset ds(TopicId("h"), {tweet("t1", "u1"), d});
  EXPECT_EQ(original_tweets(ds), std::set<TweetId>{tid("t1")});
  EXPECT_THROW(retweets_of(tid("x"), ds), Error);
}

TEST(Roles, AmplifiedTweets) {
  TopicDataset ds(TopicId("h"), {tweet("t1", "a"), tweet("t2", "b"), tweet("r1", "c", "t1"), tweet("r2", "d", "t1")});
  EXPECT_EQ(amplified_tweets(ds), std::set<TweetId>{tid("t1")});
  TopicDataset none(TopicId("h"), {tweet("t1", "a"), tweet("t2", "b")});
  EXPECT_TRUE(amplified_tweets(none).empty());
  EXPECT_EQ(amplified_tweets(ten_tweets()), (std::set<TweetId>{tid("t1"), tid("t2"), tid("t4")}));
}

TEST(Roles, RetweetsOf) {
  TopicDataset ds = ten_tweets();
  EXPECT_EQ(retweets_of(tid("t1"), ds), (std::set<TweetId>{tid("t6"), tid("t7")}));
  EXPECT_TRUE(retweets_of(tid("t3"), ds).empty());
  EXPECT_THROW(retweets_of(tid("t6"), ds), Error);
  EXPECT_THROW(retweets_of(tid("missing"), ds), Error);
}

TEST(Roles, RetweetsOfIgnoresDanglingRetweet) {
  Tweet dangling = tweet("r9", "z");
  dangling.dangling = true;
  TopicDataset ds(TopicId("h"), {tweet("t1", "a"), tweet("r1", "b", "t1"), dangling});
  EXPECT_EQ(retweets_of(tid("t1"), ds), std::set<TweetId>{tid("r1")});
  RoleAssignment ra = assign_roles(ds);
  EXPECT_FALSE(ra.distributors.contains(user("z")));
  EXPECT_FALSE(ra.creators.contains(user("z")));
}

TEST(Roles, CreatorsAndDistributors) {
  TopicDataset ds(TopicId("h"), {tweet("t1", "u1"), tweet("r1", "u2", "t1")});
  EXPECT_EQ(content_creators(ds), std::set<UserId>{user("u1")});
  EXPECT_EQ(content_distributors(ds), std::set<UserId>{user("u2")});
}

TEST(Roles, CreatorPrecedenceWithinTopic) {
  TopicDataset ds = fixtures::role_fixture();
  EXPECT_TRUE(content_creators(ds).contains(user("bob")));
  EXPECT_FALSE(content_distributors(ds).contains(user("bob")));
}

TEST(Roles, HandEnumeratedFixture) {
  RoleAssignment ra = assign_roles(fixtures::role_fixture());
  RoleAssignment expected;
  expected.topic = TopicId("h");
  expected.originals = {tid("o1"), tid("o2"), tid("o3"), tid("o4"), tid("o5")};
  expected.amplified = {tid("o1"), tid("o2")};
  expected.retweet_map = {{tid("o1"), {tid("r1"), tid("r2"), tid("r3")}}, {tid("o2"), {tid("r4")}}};
  expected.creators = {user("alice"), user("bob")};
  expected.distributors = {user("erin"), user("frank")};
  expected.retweet_links = {{user("erin"), user("alice")},
                            {user("frank"), user("alice")},
                            {user("bob"), user("alice")},
                            {user("erin"), user("bob")}};
  EXPECT_EQ(ra, expected);
}

TEST(Roles, EmptyTopic) {
  RoleAssignment ra = assign_roles(TopicDataset(TopicId("h"), {}));
  EXPECT_TRUE(ra.originals.empty());
  EXPECT_TRUE(ra.amplified.empty());
  EXPECT_TRUE(ra.retweet_map.empty());
  EXPECT_TRUE(ra.creators.empty());
  EXPECT_TRUE(ra.distributors.empty());
}

TEST(Roles, UserCanHoldDifferentRolesAcrossTopics) {
  TopicDataset x(TopicId("x"), {tweet("1", "u", std::nullopt, "x"), tweet("2", "v", "1", "x")});
  TopicDataset y(TopicId("y"), {tweet("3", "w", std::nullopt, "y"), tweet("4", "u", "3", "y")});
  EXPECT_TRUE(assign_roles(x).creators.contains(user("u")));
  EXPECT_TRUE(assign_roles(y).distributors.contains(user("u")));
}

TEST(Roles, InvariantsOnRandomDatasets) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    TopicDataset ds = fixtures::random_dataset(rng, 3 + rng() % 30, 1 + rng() % 20, rng() % 40, 0);
    RoleAssignment ra = assign_roles(ds);
    const auto users = participants(ds);
    for (const TweetId& t : ra.amplified) EXPECT_TRUE(ra.originals.contains(t));
    for (const auto& [t, rts] : ra.retweet_map) {
      EXPECT_TRUE(ra.amplified.contains(t));
      EXPECT_EQ(rts, retweets_of(t, ds));
    }
    std::set<UserId> authors;
    for (const TweetId& t : ra.amplified) authors.insert(ds.find(t)->author);
    EXPECT_EQ(ra.creators, authors);
    for (const UserId& u : ra.distributors) {
      EXPECT_FALSE(ra.creators.contains(u));
      EXPECT_TRUE(users.contains(u));
    }
    for (const UserId& u : ra.creators) EXPECT_TRUE(users.contains(u));
    EXPECT_EQ(ra, assign_roles(ds));
  }
}

TEST(Roles, RemovingUnretweetedOriginalOnlyChangesOriginals) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    TopicDataset ds = fixtures::random_dataset(rng, 10, 8, 6, 0);
    RoleAssignment ra = assign_roles(ds);
    for (const TweetId& t : ra.originals) {
      if (ra.amplified.contains(t)) continue;
      std::vector<Tweet> kept;
      for (const Tweet& x : ds.tweets())
        if (x.id != t) kept.push_back(x);
      RoleAssignment reduced = assign_roles(TopicDataset(ds.topic(), kept));
      RoleAssignment expected = ra;
      expected.originals.erase(t);
      EXPECT_EQ(reduced, expected);
      break;
    }
  }
}
