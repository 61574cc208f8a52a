#!/usr/bin/env python3
"""Regenerate the bundled mini WordNet database files from the synset
table below. The output follows the standard Princeton layout (index.noun,
data.noun, index.verb, data.verb) so the same reader loads either this
bundle or a full WordNet distribution.

Run from the repo root:  python scripts/build_wordnet_db.py
"""
from __future__ import annotations

from collections import defaultdict
from pathlib import Path

# (name, lexname, words, hypernym names) — name doubles as the first word.
# Words are extra lemmas indexed to the same synset (inflected surface
# forms included deliberately: lookup is per surface form, no morphology).
NOUNS = [
    ("entity", "noun.Tops", [], []),
    ("abstraction", "noun.Tops", [], ["entity"]),
    ("physical_entity", "noun.Tops", [], ["entity"]),
    ("object", "noun.Tops", [], ["physical_entity"]),
    ("whole", "noun.Tops", [], ["object"]),
    ("living_thing", "noun.Tops", [], ["whole"]),
    ("organism", "noun.Tops", [], ["living_thing"]),
    ("causal_agent", "noun.Tops", [], ["physical_entity"]),
    ("person", "noun.Tops", [], ["causal_agent", "organism"]),
    ("psychological_feature", "noun.Tops", [], ["abstraction"]),
    ("cognition", "noun.cognition", [], ["psychological_feature"]),
    ("event", "noun.Tops", [], ["psychological_feature"]),
    ("act", "noun.act", [], ["event"]),
    ("communication", "noun.communication", [], ["abstraction"]),
    ("attribute", "noun.Tops", [], ["abstraction"]),
    ("state", "noun.state", [], ["attribute"]),
    ("relation", "noun.Tops", [], ["abstraction"]),
    ("measure", "noun.Tops", [], ["abstraction"]),
    ("group", "noun.Tops", [], ["abstraction"]),
    ("message", "noun.communication", [], ["communication"]),
    ("statement", "noun.communication", [], ["message"]),
    ("argument", "noun.communication", ["arguments"], ["statement"]),
    ("question", "noun.communication", ["questions"], ["message"]),
    ("address", "noun.communication", [], ["message"]),
    ("overview", "noun.communication", [], ["statement"]),
    ("answer", "noun.communication", [], ["statement"]),
    ("written_communication", "noun.communication", [], ["communication"]),
    ("writing", "noun.communication", [], ["written_communication"]),
    ("section", "noun.communication", ["sections"], ["writing"]),
    ("paragraph", "noun.communication", ["paragraphs"], ["writing"]),
    ("document", "noun.communication", ["documents"], ["writing"]),
    ("text", "noun.communication", ["txt"], ["writing"]),
    ("word", "noun.communication", ["words"], ["communication"]),
    ("offer", "noun.communication", ["offers"], ["message"]),
    ("reply", "noun.communication", [], ["answer"]),
    ("status", "noun.state", [], ["state"]),
    ("rank", "noun.state", [], ["status"]),
    ("ordinal_number", "noun.quantity", ["ordinal"], ["rank"]),
    ("first", "noun.quantity", [], ["ordinal_number"]),
    ("second", "noun.quantity", [], ["ordinal_number"]),
    ("third", "noun.quantity", [], ["ordinal_number"]),
    ("fourth", "noun.quantity", [], ["ordinal_number"]),
    ("possession", "noun.possession", [], ["abstraction"]),
    ("money", "noun.possession", [], ["possession"]),
    ("cash", "noun.possession", [], ["money"]),
    ("award", "noun.possession", [], ["possession"]),
    ("prize", "noun.possession", ["prizes"], ["award"]),
    ("reward", "noun.possession", ["rewards"], ["award"]),
    ("bonus", "noun.possession", [], ["award"]),
    ("adult", "noun.person", [], ["person"]),
    ("man", "noun.person", ["men"], ["adult"]),
    ("woman", "noun.person", ["women"], ["adult"]),
    ("worker", "noun.person", ["workers"], ["person"]),
    ("employer", "noun.person", ["employers"], ["person"]),
    ("juvenile", "noun.person", [], ["person"]),
    ("teenager", "noun.person", ["teenagers"], ["juvenile"]),
    ("consumer", "noun.person", ["consumers"], ["person"]),
    ("customer", "noun.person", ["customers"], ["consumer"]),
    ("winner", "noun.person", ["winners"], ["person"]),
    ("caller", "noun.person", ["callers"], ["person"]),
    ("friend", "noun.person", ["friends"], ["person"]),
    ("mother", "noun.person", ["mum", "mom"], ["adult"]),
    ("doctor", "noun.person", ["dr"], ["person"]),
    ("expert", "noun.person", ["experts"], ["person"]),
    ("player", "noun.person", ["players"], ["person"]),
    ("content", "noun.cognition", [], ["cognition"]),
    ("idea", "noun.cognition", ["ideas"], ["content"]),
    ("information", "noun.cognition", ["info"], ["cognition"]),
    ("example", "noun.cognition", ["examples"], ["information"]),
    ("instance", "noun.cognition", [], ["example"]),
    ("fact", "noun.cognition", ["facts"], ["information"]),
    ("time_period", "noun.time", [], ["measure"]),
    ("day", "noun.time", ["days"], ["time_period"]),
    ("week", "noun.time", ["weeks"], ["time_period"]),
    ("night", "noun.time", ["nights"], ["time_period"]),
    ("tonight", "noun.time", [], ["night"]),
    ("holiday", "noun.time", ["holidays"], ["time_period"]),
    ("artifact", "noun.artifact", [], ["whole"]),
    ("instrumentality", "noun.artifact", [], ["artifact"]),
    ("device", "noun.artifact", [], ["instrumentality"]),
    ("phone", "noun.artifact", ["telephone", "phones"], ["device"]),
    ("computer", "noun.artifact", ["computers"], ["device"]),
    ("mobile", "noun.artifact", ["cellphone"], ["device"]),
    ("action", "noun.act", [], ["act"]),
    ("activity", "noun.act", [], ["act"]),
    ("game", "noun.act", ["games"], ["activity"]),
    ("service", "noun.act", ["services"], ["activity"]),
    ("shopping", "noun.act", [], ["activity"]),
    ("contest", "noun.event", ["contests"], ["event"]),
    ("lottery", "noun.event", [], ["contest"]),
    ("draw", "noun.event", [], ["contest"]),
    ("incident", "noun.event", [], ["event"]),
    ("party", "noun.event", ["parties"], ["event"]),
    ("social_group", "noun.group", [], ["group"]),
    ("organization", "noun.group", [], ["social_group"]),
    ("company", "noun.group", ["companies"], ["organization"]),
    ("government", "noun.group", [], ["organization"]),
    ("team", "noun.group", ["teams"], ["social_group"]),
    ("news", "noun.communication", [], ["message"]),
    ("report", "noun.communication", ["reports"], ["message"]),
    ("guarantee", "noun.communication", [], ["statement"]),
    ("voucher", "noun.communication", ["vouchers"], ["document"]),
    ("ticket", "noun.communication", ["tickets"], ["document"]),
    ("claim", "noun.communication", ["claims"], ["statement"]),
    ("call", "noun.communication", ["calls"], ["message"]),
    ("sms", "noun.communication", ["msg"], ["message"]),
    ("number", "noun.quantity", ["numbers"], ["measure"]),
    ("language", "noun.communication", [], ["communication"]),
    ("market", "noun.group", ["markets"], ["organization"]),
]

VERBS = [
    ("think", "verb.cognition", ["thinks", "thought"], []),
    ("believe", "verb.cognition", ["believes"], ["think"]),
    ("consider", "verb.cognition", ["considers"], ["think"]),
    ("acknowledge", "verb.cognition", ["acknowledges"], ["think"]),
    ("expect", "verb.cognition", ["expects"], ["believe"]),
    ("suppose", "verb.cognition", [], ["expect"]),
    ("understand", "verb.cognition", [], ["think"]),
    ("guess", "verb.cognition", [], ["expect"]),
    ("know", "verb.cognition", ["knows", "knew"], []),
    ("remember", "verb.cognition", [], ["think"]),
    ("plan", "verb.cognition", [], ["think"]),
    ("communicate", "verb.communication", [], []),
    ("state", "verb.communication", ["say", "says", "said", "tell", "tells", "told"], ["communicate"]),
    ("announce", "verb.communication", ["announced"], ["state"]),
    ("claim", "verb.communication", ["claimed"], ["state"]),
    ("address", "verb.communication", [], ["communicate"]),
    ("telecommunicate", "verb.communication", [], ["communicate"]),
    ("call", "verb.communication", ["called"], ["telecommunicate"]),
    ("text", "verb.communication", ["txt"], ["telecommunicate"]),
    ("reply", "verb.communication", ["respond"], ["state"]),
    ("agree", "verb.communication", ["agreed"], ["communicate"]),
    ("ask", "verb.communication", ["asked"], ["communicate"]),
    ("warn", "verb.communication", ["warned"], ["state"]),
    ("promise", "verb.communication", [], ["state"]),
    ("congratulate", "verb.communication", ["congratulations", "congrats"], ["communicate"]),
    ("give", "verb.possession", ["gave", "given"], []),
    ("provide", "verb.possession", ["supply"], ["give"]),
    ("offer", "verb.possession", ["offered"], ["give"]),
    ("pay", "verb.possession", ["paid"], ["give"]),
    ("award", "verb.possession", ["grant", "awarded"], ["give"]),
    ("get", "verb.possession", ["got"], []),
    ("gain", "verb.possession", [], ["get"]),
    ("receive", "verb.possession", ["received"], ["get"]),
    ("collect", "verb.possession", [], ["get"]),
    ("win", "verb.competition", ["won", "wins"], ["gain"]),
    ("play", "verb.competition", ["played"], []),
    ("apply", "verb.social", [], []),
    ("come", "verb.motion", ["came"], []),
    ("go", "verb.motion", ["went", "gone"], []),
    ("make", "verb.creation", ["made"], []),
    ("stop", "verb.change", ["stopped"], []),
    ("limit", "verb.change", ["limited"], []),
]

LEXNAMES = [
    "adj.all", "adj.pert", "adv.all", "noun.Tops", "noun.act", "noun.animal",
    "noun.artifact", "noun.attribute", "noun.body", "noun.cognition",
    "noun.communication", "noun.event", "noun.feeling", "noun.food",
    "noun.group", "noun.location", "noun.motive", "noun.object",
    "noun.person", "noun.phenomenon", "noun.plant", "noun.possession",
    "noun.process", "noun.quantity", "noun.relation", "noun.shape",
    "noun.state", "noun.substance", "noun.time", "verb.body", "verb.change",
    "verb.cognition", "verb.communication", "verb.competition",
    "verb.consumption", "verb.contact", "verb.creation", "verb.emotion",
    "verb.motion", "verb.perception", "verb.possession", "verb.social",
    "verb.stative", "verb.weather", "adj.ppl",
]


def emit(table, pos, out_dir: Path) -> None:
    suffix = {"n": "noun", "v": "verb"}[pos]
    offsets = {name: f"{(i + 1) * 23:08d}" for i, (name, _, _, _) in enumerate(table)}
    data_lines = []
    index: dict[str, list[str]] = defaultdict(list)
    for name, lexname, extra_words, hypernyms in table:
        words = [name] + extra_words
        for w in words:
            index[w].append(offsets[name])
        fields = [offsets[name], f"{LEXNAMES.index(lexname):02d}", pos, f"{len(words):02x}"]
        for w in words:
            fields += [w, "0"]
        fields.append(f"{len(hypernyms):03d}")
        for h in hypernyms:
            fields += ["@", offsets[h], pos, "0000"]
        data_lines.append(" ".join(fields) + f" | {name.replace('_', ' ')}")
    index_lines = []
    for lemma in sorted(index):
        offs = index[lemma]
        index_lines.append(f"{lemma} {pos} {len(offs)} 1 @ {len(offs)} 0 " + " ".join(offs))
    header = "  1 This database follows the standard WordNet file layout.\n"
    (out_dir / f"data.{suffix}").write_text(header + "\n".join(data_lines) + "\n", encoding="utf-8")
    (out_dir / f"index.{suffix}").write_text(header + "\n".join(index_lines) + "\n", encoding="utf-8")


def main() -> None:
    out_dir = Path(__file__).resolve().parent.parent / "src" / "contrastminer" / "data" / "wordnet"
    out_dir.mkdir(parents=True, exist_ok=True)
    emit(NOUNS, "n", out_dir)
    emit(VERBS, "v", out_dir)
    print(f"wrote mini WordNet ({len(NOUNS)} noun / {len(VERBS)} verb synsets) to {out_dir}")


if __name__ == "__main__":
    main()
