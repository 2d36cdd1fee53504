"""A census of prime reduced curves up to seven double points."""

from subchord.census import catalog, enumerate_records

records = enumerate_records(7, "prime_reduced")
for r in records:
    print(f"n={r.n}  {str(r.word):<30} lambda={r.lambda_:>3}  a={r.averaged:>2}  "
          f"counts={r.counts.as_tuple()}")

print()
print(catalog(4, "csv"), end="")
