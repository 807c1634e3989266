import os
from setuptools import setup, Command, find_packages

with open('requirements.txt') as f:
    required = f.read().splitlines()

CLEAN_PATHS = ('./build', './dist', './*.egg-info', './.pytest_cache', './.hypothesis',
               './QWhittaker/__pycache__', './QWhittaker/tests/__pycache__')

class CleanCommand(Command):
    """Removes build output and test caches from the project root."""
    user_options = []
    def initialize_options(self):
        pass
    def finalize_options(self):
        pass
    def run(self):
        os.system('rm -vrf {}'.format(' '.join(CLEAN_PATHS)))

setup(
	name='QWhittaker',
	version = "0.1.0",
	packages = find_packages(),
	license="LICENSE",
	description="Exact q-deformed gl(n) Whittaker functions, q-Toda operators and their verification suites",
	long_description=open('README.md').read(),
	long_description_content_type='text/markdown',
	python_requires='>=3.8',
	install_requires=required,
	extras_require={
		'test': ['pytest', 'hypothesis'],
	},
	entry_points={
		'console_scripts': ['qwhittaker=QWhittaker.Cli:main'],
	},
	cmdclass={
		'clean': CleanCommand,
	}
)
