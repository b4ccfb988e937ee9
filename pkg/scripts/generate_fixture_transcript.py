#!/usr/bin/env python3
"""Generate the synthetic meeting transcript bundled under tests/data/.

Deterministic (seeded), so the checked-in fixture can be regenerated
verbatim. The text mimics anonymized project-call transcripts: speaker
placeholders, filler words, inconsistent punctuation.
"""

import random
from pathlib import Path

TOPICS = [
    ("budget", ["we need to finalize the {} budget before friday",
                "the {} costs are higher than we expected",
                "finance asked us to cut the {} spending by ten percent",
                "i think the {} allocation should move to next quarter"]),
    ("release", ["the {} release is scheduled for the end of june",
                 "we have to wait until june for the {} rollout",
                 "testing for the {} build starts on monday",
                 "the {} deadline slipped because of the integration issues"]),
    ("hiring", ["we are interviewing two candidates for the {} team",
                "the {} position has been open since march",
                "person3 will onboard the new {} engineer next week",
                "we agreed to pause {} hiring until the budget is settled"]),
    ("evaluation", ["the {} metrics improved after the last update",
                    "we should compare the {} numbers against the baseline",
                    "the {} report goes to organization2 on thursday",
                    "someone has to rerun the {} benchmarks with the new data"]),
    ("infrastructure", ["the {} servers were down twice this week",
                        "migration of the {} cluster is still blocked",
                        "we decided to move the {} storage to the new provider",
                        "the {} monitoring dashboard needs an owner"]),
]

SUBJECTS = {
    "budget": ["travel", "cloud", "hardware", "training"],
    "release": ["mobile", "platform", "api", "desktop"],
    "hiring": ["backend", "research", "support", "design"],
    "evaluation": ["accuracy", "latency", "quality", "coverage"],
    "infrastructure": ["staging", "production", "backup", "logging"],
}

FILLERS = [
    "well", "yeah okay", "um right", "so", "uh huh", "hmm okay", "yes",
]

FOLLOWUPS = [
    "and we can revisit that next week",
    "but person5 disagrees with the timeline",
    "so the action item goes to person2",
    "because the last attempt did not work out",
    "and everyone should update the shared document",
]


def generate(seed: int = 7, lines: int = 200) -> str:
    rng = random.Random(seed)
    out = []
    speaker = None
    for i in range(lines):
        if rng.random() < 0.6:
            speaker = f"PERSON{rng.randint(1, 9)}"
            prefix = f"({speaker}) "
        else:
            prefix = ""
        if rng.random() < 0.15:
            out.append(prefix + rng.choice(FILLERS) + ".")
            continue
        topic, templates = rng.choice(TOPICS)
        sentence = rng.choice(templates).format(rng.choice(SUBJECTS[topic]))
        if rng.random() < 0.4:
            sentence += ", " + rng.choice(FOLLOWUPS)
        if rng.random() < 0.3:
            sentence = rng.choice(FILLERS) + ", " + sentence
        terminator = rng.choice([".", ".", ".", "?", "!"])
        out.append(prefix + sentence + terminator)
    return "\n".join(out) + "\n"


if __name__ == "__main__":
    target = Path(__file__).resolve().parent.parent / "tests" / "data" / "fixture_meeting.txt"
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(generate(), encoding="utf-8")
    print(f"wrote {target}")
