#!/usr/bin/env python3
"""
Pipeline script to run a full experiment:
1. Generate bistable, binomial and equigenerated corpora
2. Betti table and regularities of the worked example
3. Regularity of powers of an equigenerated ideal
4. The acceptance battery
"""

import subprocess
import sys
import os
import time
from biregkit.utils import get_current_timestamp, get_data_path, is_test_mode, is_smoke_test_mode

UV = '. "$HOME/.cargo/env" && uv run'


def run_command(cmd, description):
    """Run a command and handle errors"""
    print(f"\n{'='*60}")
    print(f"STEP: {description}")
    print(f"COMMAND: {cmd}")
    print(f"{'='*60}")

    start_time = time.time()
    result = subprocess.run(cmd, shell=True)
    end_time = time.time()

    duration = end_time - start_time
    print(f"\nCompleted in {duration:.1f} seconds")

    if result.returncode != 0:
        print(f"ERROR: Command failed with exit code {result.returncode}")
        return False

    return True


def check_file_exists(filepath, description):
    """Check if a file exists and show info"""
    if os.path.exists(filepath):
        size = os.path.getsize(filepath)
        print(f"✓ {description}: {filepath} ({size:,} bytes)")
        return True
    else:
        print(f"✗ {description}: {filepath} (missing)")
        return False


def main():
    """Run the complete pipeline"""
    print("BIGRADED REGULARITY EXPERIMENT PIPELINE")
    print("=" * 60)

    if is_smoke_test_mode():
        print("🚨 SMOKE TEST MODE ENABLED - 1 ideal per corpus, outputs will go to data/smoke/")
        print("=" * 60)
    elif is_test_mode():
        print("🧪 TEST MODE ENABLED - All outputs will go to data/test/")
        print("=" * 60)

    get_data_path('')
    print(f"Started at {get_current_timestamp()}")

    # Step 1: corpora
    for flavor, options in (('bistable', '--n 2 --m 2'),
                            ('binomial', '--n 2 --m 2 --max-degree 1 1'),
                            ('equigenerated-x', '--n 2 --degree 2 --generators 2 3')):
        cmd = f"{UV} biregkit corpus --flavor {flavor} --seed 0 --count 20 {options}"
        if not run_command(cmd, f"Generate {flavor} corpus"):
            print("Pipeline failed at step 1")
            return 1

    xbi = get_data_path('corpus/binomial/xbi.json')
    equigenerated = get_data_path('corpus/equigenerated-x/equigenerated-x-0-000.json')
    if not (check_file_exists(xbi, 'Worked example') and check_file_exists(equigenerated, 'Equigenerated ideal')):
        print("Step 1 output file missing")
        return 1

    # Step 2: worked example
    betti_out = get_data_path('xbi_betti.json')
    reg_out = get_data_path('xbi_reg.json')
    if not run_command(f"{UV} biregkit betti --input {xbi} > {betti_out}", "Betti table of the worked example"):
        print("Pipeline failed at step 2")
        return 1
    if not run_command(f"{UV} biregkit reg --input {xbi} --via svalues > {reg_out}", "Regularities of the worked example"):
        print("Pipeline failed at step 2")
        return 1

    # Step 3: powers
    powers_out = get_data_path('powers.json')
    if not run_command(f"{UV} biregkit powers --input {equigenerated} --jmax 4 > {powers_out}",
                       "Regularity of powers"):
        print("Pipeline failed at step 3")
        return 1

    # Step 4: acceptance battery
    summary_out = get_data_path('verify_summary.csv')
    if not run_command(f"{UV} biregkit verify --suite paper --out {summary_out}", "Acceptance battery"):
        print("Pipeline failed at step 4")
        return 1

    # Final summary
    print(f"\n{'='*60}")
    print("PIPELINE COMPLETED SUCCESSFULLY!")
    print(f"{'='*60}")
    print("\nGenerated files:")
    check_file_exists(betti_out, 'Worked example Betti table')
    check_file_exists(reg_out, 'Worked example regularities')
    check_file_exists(powers_out, 'Powers table')
    check_file_exists(summary_out, 'Acceptance summary')

    return 0


if __name__ == "__main__":
    sys.exit(main())
