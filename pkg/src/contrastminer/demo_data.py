"""Deterministic synthetic corpora for demos, tests and the regression
pipeline: an SMS-style spam/ham dataset (train 3,900 @ 13% spam,
validation 100 @ 12%, test 1,115 @ 13%) and a news-style general-English
corpus. Generation is template-based and reproducible bit-for-bit from the
seed.

If you have the real SMS Spam Collection, convert it to JSONL
({"text": ..., "label": "spam"|"ham"}) and use it instead; the pipeline is
corpus-agnostic.
"""
from __future__ import annotations

from pathlib import Path

from .corpus import Corpus, Sentence, _StableRandom, save_jsonl

HAM_TEMPLATES = [
    "are you coming home for dinner tonight",
    "can you pick me up at {hour} please",
    "lol that was so funny i cant stop laughing",
    "i will be there in {num} minutes",
    "what time is the {event} tomorrow",
    "see you at {place} then",
    "sorry i missed your call earlier",
    "do you want to meet at {place} later",
    "im running late be there by {hour}",
    "hey {name} how was your day",
    "dont forget to buy milk on the way home",
    "good night talk to you tomorrow",
    "thanks for the lift {name} you are a star",
    "my {relative} is visiting this weekend",
    "the {event} was great you should have come",
    "im at {place} now where are you",
    "ok cool see you soon",
    "can we move the {event} to {day}",
    "i think i left my keys at your place",
    "how did the exam go {name}",
    "just got back from {place} so tired",
    "shall i bring anything to the {event}",
    "happy birthday {name} hope you have a lovely day",
    "the weather is awful here hope its better there",
    "did you watch the game last night it was unreal",
    "im cooking {food} tonight come over if you like",
    "miss you loads when are you back",
    "my phone battery is dying text you later",
    "what do you fancy for dinner {food} or {food2}",
    "meet me outside the {place} at {hour}",
    "u coming to {place} or what",
    "dont be late again {name} lol",
    "the {relative} says hi by the way",
    "i got the job {name} we should celebrate",
    "feeling sick today staying in bed",
    "can u lend me {num} quid till friday",
    "that movie was rubbish we want our money back",
    "remember the {event} starts at {hour} sharp",
    "im so bored at work today",
    "call me when you get this",
]

SPAM_TEMPLATES = [
    "congratulations you have won a {prize} call {phone} now to claim",
    "winner you have been selected for a free {prize} call {phone}",
    "free entry to win {money} cash txt WIN to {short} now",
    "urgent your mobile number has won {money} call {phone} immediately",
    "claim your free {prize} now reply YES to {short}",
    "you have won a guaranteed {money} prize call {phone} to collect",
    "free {prize} for {brand} customers text CLAIM to {short}",
    "cash prize of {money} waiting for you call {phone} now",
    "win a brand new {prize} today txt GO to {short} entry free",
    "your number was chosen for a {money} reward call {phone} asap",
    "exclusive offer free {prize} with every order call {phone} today",
    "last chance to claim your {money} award reply NOW to {short}",
    "you are a lucky winner of our {brand} draw call {phone} to claim your prize",
    "get a free {prize} plus {money} cash just text WIN to {short}",
    "urgent prize alert {money} guaranteed call {phone} before {hour}",
    "free ringtones and {prize} offers reply TONE to {short} now",
    "collect your {money} voucher today call {phone} lines open till {hour}",
    "amazing deal win {money} every week txt PLAY to {short} to enter now",
    "your {brand} account has won a bonus {prize} claim now on {phone}",
    "hot offer free {prize} delivery just call {phone} and quote {code}",
    "win tickets to see {band} live text BAND to {short} now entry free",
    "important notice you won {money} in our lottery call {phone} to claim",
    "free weekly prize draw for {brand} users reply WIN to {short}",
    "special award {money} cash or a {prize} call {phone} choose now",
    "your loyalty reward of {money} expires today call {phone} urgent",
]

NEWS_TEMPLATES = [
    "the government announced new {topic} measures on {day}",
    "shares in {company} rose {num} percent after the earnings report",
    "officials said the {topic} talks would continue next week",
    "the {city} council approved the {topic} plan by a narrow margin",
    "analysts expect the {topic} market to recover later this year",
    "police reported a fall in {topic} incidents across {city}",
    "the minister declined to comment on the {topic} inquiry",
    "researchers at {city} university published a study on {topic}",
    "the {company} chief executive resigned on {day} amid pressure",
    "heavy rain disrupted transport across {city} on {day}",
    "the central bank held interest rates steady citing {topic} risks",
    "lawmakers debated the {topic} bill late into the night",
    "a spokesman for {company} said production would resume on {day}",
    "the {city} mayor unveiled a budget focused on {topic}",
    "exports of {goods} fell {num} percent in the last quarter",
    "the court ruled against {company} in the {topic} case",
    "voters in {city} go to the polls on {day}",
    "prices of {goods} reached a record high this week",
    "the airline cancelled {num} flights due to the strike",
    "a new report warns of rising {topic} costs for households",
    "the {company} merger faces review by regulators",
    "scientists warned that {topic} trends are accelerating",
    "the {city} festival drew record crowds on {day}",
    "unions and {company} reached a deal after long {topic} negotiations",
    "the opposition criticised the handling of the {topic} crisis",
]

_FILLS = {
    "name": ["john", "sara", "mike", "emma", "dave", "lucy", "tom", "nina"],
    "place": ["home", "school", "work", "the gym", "town", "the station", "the cafe"],
    "hour": ["5", "6", "7", "8", "noon", "5.30", "half six"],
    "num": ["2", "5", "10", "15", "20", "3"],
    "event": ["meeting", "party", "lecture", "match", "dinner", "picnic"],
    "day": ["monday", "tuesday", "wednesday", "thursday", "friday", "saturday"],
    "relative": ["mum", "brother", "sister", "cousin", "grandma"],
    "food": ["pasta", "curry", "pizza", "soup"],
    "food2": ["rice", "noodles", "salad"],
    "prize": ["holiday", "phone", "laptop", "tv", "camera", "car"],
    "money": ["100", "500", "1000", "2000", "5000", "250"],
    "brand": ["vodanet", "mobicom", "telestar", "airlink"],
    "band": ["the strollers", "red havoc", "moonpilots"],
    "topic": ["housing", "energy", "health", "transport", "education", "trade", "climate"],
    "company": ["acme corp", "nordex", "bluewave", "omnitech", "granite bank"],
    "city": ["london", "leeds", "bristol", "york", "glasgow", "dublin"],
    "goods": ["steel", "wheat", "oil", "timber", "cotton"],
}


def _fill(template: str, rng: _StableRandom, counter: list[int]) -> str:
    out = template
    while "{" in out:
        start = out.index("{")
        end = out.index("}", start)
        key = out[start + 1:end]
        if key == "phone":
            value = "0" + "".join(str(int(rng.random() * 10)) for _ in range(10))
        elif key == "short":
            value = str(80000 + int(rng.random() * 9999))
        elif key == "code":
            value = "X" + str(int(rng.random() * 900) + 100)
        else:
            pool = _FILLS[key]
            value = pool[int(rng.random() * len(pool)) % len(pool)]
        out = out[:start] + value + out[end + 1:]
    counter[0] += 1
    return out


def _make_sentences(rng, templates, label, count, counter, prefix) -> list[Sentence]:
    out = []
    for _ in range(count):
        template = templates[int(rng.random() * len(templates)) % len(templates)]
        out.append(
            Sentence(
                id=f"{prefix}{counter[0]:06d}",
                text=_fill(template, rng, counter),
                label=label,
            )
        )
    return out


def _mixed_corpus(rng, n_total, n_spam, counter, prefix, name) -> Corpus:
    spam = _make_sentences(rng, SPAM_TEMPLATES, "spam", n_spam, counter, prefix)
    ham = _make_sentences(rng, HAM_TEMPLATES, "ham", n_total - n_spam, counter, prefix)
    merged = spam + ham
    rng.shuffle(merged)
    return Corpus(tuple(merged), name)


def sms_demo(seed: int = 13) -> dict[str, Corpus]:
    """SMS-style dataset with the usual published split statistics:
    train 3,900 (13% spam), validation 100 (12%), test 1,115 (13%)."""
    rng = _StableRandom(seed)
    counter = [0]
    return {
        "train": _mixed_corpus(rng, 3900, 507, counter, "tr", "sms-train"),
        "validation": _mixed_corpus(rng, 100, 12, counter, "va", "sms-validation"),
        "test": _mixed_corpus(rng, 1115, 145, counter, "te", "sms-test"),
    }


def news_demo(seed: int = 13, n: int = 5000) -> Corpus:
    """News-style general-English background corpus."""
    rng = _StableRandom(seed + 1)
    counter = [0]
    sentences = _make_sentences(rng, NEWS_TEMPLATES, None, n, counter, "ge")
    return Corpus(tuple(sentences), "news-general")


def write_demo_dataset(out_dir: str | Path, seed: int = 13, news_size: int = 5000) -> dict[str, Path]:
    """Write the full demo dataset as JSONL files; returns the path map."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = {}
    for split, corpus in sms_demo(seed).items():
        paths[split] = out_dir / f"sms_{split}.jsonl"
        save_jsonl(corpus, paths[split])
    paths["general"] = out_dir / "news_general.jsonl"
    save_jsonl(news_demo(seed, news_size), paths["general"])
    return paths


def main(argv=None) -> int:
    import argparse

    parser = argparse.ArgumentParser(
        description="Write the synthetic SMS-style demo dataset as JSONL files."
    )
    parser.add_argument("--out", required=True, help="output directory")
    parser.add_argument("--seed", type=int, default=13, help="random seed (default: 13)")
    parser.add_argument("--news-size", type=int, default=5000,
                        help="general-English corpus size (default: 5000)")
    args = parser.parse_args(argv)
    for name, path in write_demo_dataset(args.out, args.seed, args.news_size).items():
        print(f"{name}: {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
