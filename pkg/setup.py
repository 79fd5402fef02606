import os
from setuptools import setup


install_requires = [
	'numpy',
	'scipy',
	'iterprinter',
	] 

try:
	from functools import cached_property
except ImportError:
	install_requires += ['backports.cached-property']

test_requires = [
	'pytest',
]


with open('README.md', 'r') as f:
	long_description = f.read()

ns = {}
with open('casmodes/version.py') as f:
	exec(f.read(), ns)

version = ns['__version__']

setup(name='casmodes',
	version = version,
	description = 'Plasmon and eddy-current decomposition of the Casimir energy between metallic mirrors',
	long_description = long_description,
	long_description_content_type = 'text/markdown', 
	packages = ['casmodes',],
	install_requires = install_requires,
	test_requires = test_requires,
	entry_points = {
		'console_scripts': ['casmodes = casmodes.cli:main'],
	},
	python_requires='>=3.7',
	classifiers = [
		'Development Status :: 4 - Beta',
		"Programming Language :: Python :: 3",
		'Programming Language :: Python :: 3.7',
		'Programming Language :: Python :: 3.8',
		'Intended Audience :: Science/Research',
		'Topic :: Scientific/Engineering :: Physics'
	]
	)
